from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import NoArgOrder, VectorTooLong, WrongSignature
from ordinals import ZERO, Ordering, compare, enumerate_notations, parse_ordinal, plus_map
from terms import enumerate_terms, format_term, parse_term, proper_subterms
from theta_embedding import (arg_order, arg_orders, build_context, denote, same_denotation,
                             term_of, theta_order, theta_order_lt)

NOTATIONS = list(enumerate_notations(4, 3))


class TestContext:

    def test_symbols(self, ctx1):
        assert [(s.name, s.arity) for s in ctx1.signature] == [
            ("f_0", 1), ("f_1", 2), ("g", 2), ("1", 0)]

    def test_f0_only(self, ctx0):
        assert len(ctx0.signature) == 3
        assert ctx0.f(0).arity == 1

    def test_f_out_of_range(self, ctx1):
        with pytest.raises(WrongSignature):
            ctx1.f(2)

    def test_negative_k(self):
        with pytest.raises(ValueError):
            build_context(-1)

    def test_f_index(self, ctx2):
        assert ctx2.f_index(ctx2.f(2)) == 2
        assert ctx2.f_index(ctx2.g) is None


class TestDenotation:

    @pytest.mark.parametrize('term, expected', [
        ("1", "1"),
        ("g(1,1)", "1+1"),
        ("f_0(1)", "t(1)"),
        ("f_1(1,1)", "t(1,1)"),
        ("f_1(f_0(1),1)", "t(t(1),1)"),
        ("g(f_0(1),g(1,1))", "t(1)+1+1"),
    ])
    def test_examples(self, ctx1, term1, term, expected):
        assert denote(ctx1, term1(term)) == parse_ordinal(expected)

    def test_foreign_symbol(self, ctx0, term1):
        with pytest.raises(WrongSignature):
            denote(ctx0, term1("f_1(1,1)"))

    def test_sum_order_is_irrelevant(self, ctx1, term1):
        t, s = term1("g(1,g(1,1))"), term1("g(g(1,1),1)")
        assert t != s
        assert same_denotation(ctx1, t, s)
        assert not theta_order_lt(ctx1, t, s)
        assert not theta_order_lt(ctx1, s, t)
        assert theta_order(ctx1).le(t, s)

    def test_order_examples(self, ctx1, term1):
        assert theta_order_lt(ctx1, term1("g(1,1)"), term1("f_1(1,1)"))
        assert theta_order_lt(ctx1, term1("1"), term1("f_0(1)"))
        assert not theta_order_lt(ctx1, term1("f_0(1)"), term1("f_0(1)"))

    def test_denotations_are_canonical_and_nonzero(self, f1_terms, ctx1):
        for t in f1_terms:
            a = denote(ctx1, t)
            assert a != ZERO
            assert compare(a, a) == Ordering.EQUAL

    def test_subterms_are_below(self, f1_terms, ctx1):
        for t in f1_terms:
            for u in proper_subterms(t):
                assert theta_order_lt(ctx1, u, t), (format_term(u), format_term(t))


class TestArgOrders:

    def test_f1_is_lexicographic(self, ctx1, term1):
        order = arg_order(ctx1, ctx1.f(1))
        one, f01 = term1("1"), term1("f_0(1)")
        assert order((one, f01), (f01, one))
        assert not order((f01, one), (one, f01))

    def test_g_is_multiset(self, ctx1, term1):
        order = arg_order(ctx1, ctx1.g)
        one, f01 = term1("1"), term1("f_0(1)")
        assert not order((f01, one), (one, f01))
        assert order((one, one), (one, f01))

    def test_constant_has_none(self, ctx1):
        with pytest.raises(NoArgOrder):
            arg_order(ctx1, ctx1.one)

    def test_foreign_symbol(self, ctx0, ctx1):
        with pytest.raises(WrongSignature):
            arg_order(ctx0, ctx1.f(1))

    def test_table(self, ctx1):
        table = arg_orders(ctx1)
        assert sorted(s.name for s in table) == ["f_0", "f_1", "g"]


class TestTermOf:

    @pytest.mark.parametrize('text, expected', [
        ("0", "1"),
        ("1", "f_0(1)"),
        ("t(1,0)", "f_1(f_0(1),1)"),
        ("1+1", "g(f_0(1),f_0(1))"),
        ("t(1)+1+1", "g(f_0(f_0(1)),g(f_0(1),f_0(1)))"),
    ])
    def test_examples(self, ctx1, text, expected):
        assert format_term(term_of(ctx1, parse_ordinal(text))) == expected

    def test_vector_too_long(self, ctx0, ctx1):
        with pytest.raises(VectorTooLong):
            term_of(ctx1, parse_ordinal("t(1,0,0)"))
        with pytest.raises(VectorTooLong):
            term_of(ctx0, parse_ordinal("t(1,0)"))

    def test_nested_vector_too_long(self, ctx1):
        with pytest.raises(VectorTooLong):
            term_of(ctx1, parse_ordinal("t(t(1,0,0))"))

    def test_denotes_plus_image(self, ctx2):
        for a in NOTATIONS:
            assert denote(ctx2, term_of(ctx2, a)) == plus_map(a), a

    def test_preserves_order(self, ctx2):
        terms = {a: term_of(ctx2, a) for a in NOTATIONS[:120]}
        for a, b in product(terms, terms):
            expected = compare(a, b) == Ordering.LESS
            assert theta_order_lt(ctx2, terms[a], terms[b]) == expected, (a, b)

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(NOTATIONS))
    def test_result_parses_in_signature(self, ctx2, a):
        t = term_of(ctx2, a)
        assert parse_term(format_term(t), ctx2.signature) == t

    def test_rebuilds_f1_denotations(self, ctx1):
        terms = list(enumerate_terms(ctx1.signature, 4))
        for t in terms:
            a = denote(ctx1, t)
            assert denote(ctx1, term_of(ctx1, a)) == plus_map(a)
