from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from config import DEFAULT_SEED, ORDINAL_MAX_NODES, ORDINAL_MAX_VECTOR_LEN, TRANSITIVITY_TRIPLES
from errors import NonCanonicalInput, ParseError
from ordinals import (ONE, ZERO, Ordering, Sum, Theta, _cmp, compare, contains_zero_outside_one,
                      enumerate_notations, format_ordinal, from_int, is_canonical, natural_sum,
                      natural_sum_all, notation_size, one, parse_ordinal, plus_map, theta,
                      vector_width)

P = parse_ordinal
SMALL = list(enumerate_notations(3, 3))
MEDIUM = list(enumerate_notations(4, 3))
notations = st.sampled_from(MEDIUM)


class TestConstruction:

    def test_one(self):
        assert one() == Theta((ZERO,))
        assert one() is ONE
        assert compare(ZERO, one()) == Ordering.LESS
        assert compare(one(), natural_sum(one(), one())) == Ordering.LESS

    def test_theta_of_zero_is_one(self):
        assert theta([ZERO]) == ONE
        assert format_ordinal(theta([ZERO])) == "1"

    def test_theta_keeps_trailing_zero(self):
        assert format_ordinal(theta([one(), ZERO])) == "t(1,0)"

    def test_theta_strips_leading_zeros(self):
        assert theta([ZERO, one()]) == theta([one()])
        assert format_ordinal(theta([ZERO, ZERO, one()])) == "t(1)"

    def test_theta_needs_coefficients(self):
        with pytest.raises(ValueError):
            theta([])

    def test_natural_sum_identity(self):
        a = P("t(1,0)")
        assert natural_sum(ZERO, a) == a
        assert natural_sum(a, ZERO) == a

    def test_two(self):
        assert natural_sum(one(), one()) == Sum((ONE, ONE))
        assert from_int(2) == Sum((ONE, ONE))

    def test_sum_sorts_components(self):
        expected = Sum((P("t(1,0)"), ONE))
        assert natural_sum(P("t(1,0)"), one()) == expected
        assert natural_sum(one(), P("t(1,0)")) == expected

    def test_one_component_sum_is_the_theta(self):
        a = P("t(1)")
        assert natural_sum_all([a]) == a
        assert natural_sum(a, ZERO) is a

    def test_from_int(self):
        assert from_int(0) == ZERO
        assert from_int(1) == ONE
        assert format_ordinal(from_int(3)) == "1+1+1"
        with pytest.raises(ValueError):
            from_int(-1)

    def test_operators(self):
        assert ONE + ONE == from_int(2)
        assert ZERO < ONE < P("t(1)")
        assert sorted([P("t(1,0)"), ONE, ZERO]) == [ZERO, ONE, P("t(1,0)")]


class TestCompare:

    @pytest.mark.parametrize('a, b, expected', [
        ("t(1,0)", "t(t(1,0))", Ordering.LESS),
        ("t(t(1,0))", "t(1,1)", Ordering.LESS),
        ("1+1", "t(1,0)", Ordering.LESS),
        ("0", "1", Ordering.LESS),
        ("t(0,1)", "t(1)", Ordering.EQUAL),
        ("t(1,1)", "t(1)", Ordering.GREATER),
        ("t(1)+1", "t(1)", Ordering.GREATER),
        ("t(1)+1", "t(1)+1+1", Ordering.LESS),
        ("t(1,0,0)", "t(1,0)", Ordering.GREATER),
    ])
    def test_examples(self, a, b, expected):
        assert compare(P(a), P(b)) == expected

    @pytest.mark.parametrize('bad', [
        Theta((ZERO, ONE)),
        Sum((ONE, P("t(1)"))),
        Sum((ONE,)),
        Theta(()),
    ])
    def test_rejects_non_canonical(self, bad):
        assert not is_canonical(bad)
        with pytest.raises(NonCanonicalInput):
            compare(bad, ONE)
        with pytest.raises(NonCanonicalInput):
            compare(ONE, bad)

    def test_padding_is_ignored_internally(self):
        assert _cmp(Theta((ZERO, ONE)), Theta((ONE,))) == 0
        assert _cmp(Theta((ZERO, ZERO)), ONE) == 0

    def test_exhaustive_trichotomy(self):
        for a, b in product(SMALL, SMALL):
            lt = compare(a, b) == Ordering.LESS
            gt = compare(b, a) == Ordering.LESS
            assert lt + (a == b) + gt == 1, (a, b)
            assert (compare(a, b) == Ordering.EQUAL) == (a == b)

    def test_exhaustive_transitivity(self):
        less = {(a, b) for a, b in product(SMALL, SMALL) if compare(a, b) == Ordering.LESS}
        for a, b, c in product(SMALL, SMALL, SMALL):
            if (a, b) in less and (b, c) in less:
                assert (a, c) in less, (a, b, c)

    @settings(max_examples=300, deadline=None)
    @given(notations, notations, notations)
    def test_transitivity(self, a, b, c):
        if a < b and b < c:
            assert a < c

    @settings(max_examples=300, deadline=None)
    @given(notations, notations)
    def test_antisymmetry(self, a, b):
        assert compare(a, b).value == -compare(b, a).value

    @settings(max_examples=200, deadline=None)
    @given(notations)
    def test_coefficients_below_theta(self, a):
        if isinstance(a, Theta):
            assert all(c < a for c in a.coeffs)


class TestNaturalSum:

    @settings(max_examples=300, deadline=None)
    @given(notations, notations)
    def test_commutative(self, a, b):
        assert natural_sum(a, b) == natural_sum(b, a)

    @settings(max_examples=200, deadline=None)
    @given(notations, notations, notations)
    def test_associative(self, a, b, c):
        assert natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c))

    @settings(max_examples=300, deadline=None)
    @given(notations, notations, notations)
    def test_strictly_monotone(self, a, b, c):
        if a < b:
            assert natural_sum(a, c) < natural_sum(b, c)

    @settings(max_examples=200, deadline=None)
    @given(notations, notations)
    def test_result_is_canonical(self, a, b):
        s = natural_sum(a, b)
        assert is_canonical(s)
        assert notation_size(s) == notation_size(a) + notation_size(b)


class TestPlusMap:

    def test_zero(self):
        assert plus_map(ZERO) == ONE

    def test_theta_maps_coefficientwise(self):
        assert plus_map(P("t(1,0)")) == P("t(t(1),1)")
        assert plus_map(ONE) == P("t(1)")

    def test_sum(self):
        assert plus_map(P("1+1")) == P("t(1)+t(1)")

    def test_exhaustive_order_embedding(self):
        for a, b in product(SMALL, SMALL):
            assert compare(a, b) == compare(plus_map(a), plus_map(b)), (a, b)

    def test_injective(self):
        images = [plus_map(a) for a in MEDIUM]
        assert len(set(images)) == len(MEDIUM)

    @settings(max_examples=200, deadline=None)
    @given(notations)
    def test_image_has_zero_only_inside_one(self, a):
        image = plus_map(a)
        assert is_canonical(image)
        assert not contains_zero_outside_one(image)


class TestTextFormat:

    @pytest.mark.parametrize('text, expected', [
        ("t(1,0)", Theta((ONE, ZERO))),
        ("1+1", Sum((ONE, ONE))),
        ("t(0,1)", Theta((ONE,))),
        ("t(0)", ONE),
        ("0", ZERO),
        (" t ( 1 , 0 ) + 1 ", Sum((Theta((ONE, ZERO)), ONE))),
        ("1+t(1,0)", Sum((Theta((ONE, ZERO)), ONE))),
    ])
    def test_parse(self, text, expected):
        assert parse_ordinal(text) == expected

    @pytest.mark.parametrize('text', ["0", "1", "t(1,0)", "t(1,0)+1", "t(t(1),1)+t(1)+1"])
    def test_format(self, text):
        assert format_ordinal(parse_ordinal(text)) == text

    @pytest.mark.parametrize('text, position', [
        ("t(1", 3),
        ("2", 0),
        ("t 1", 2),
        ("1+", 2),
        ("t(1,0))", 6),
        ("", 0),
    ])
    def test_parse_error_position(self, text, position):
        with pytest.raises(ParseError) as exc:
            parse_ordinal(text)
        assert exc.value.position == position

    @settings(max_examples=200, deadline=None)
    @given(notations)
    def test_format_parses_back(self, a):
        assert parse_ordinal(format_ordinal(a)) == a


class TestMeasuresAndEnumeration:

    @pytest.mark.parametrize('text, size, width', [
        ("0", 0, 0),
        ("1", 1, 1),
        ("t(1,0)", 2, 2),
        ("1+1", 2, 1),
        ("t(t(1),1)", 4, 2),
        ("t(1,0,0)", 2, 3),
    ])
    def test_measures(self, text, size, width):
        a = P(text)
        assert notation_size(a) == size
        assert vector_width(a) == width

    def test_smallest_universe(self):
        assert list(enumerate_notations(1, 1)) == [ZERO, ONE]

    def test_two_nodes(self):
        found = [format_ordinal(a) for a in enumerate_notations(2, 2)]
        assert found == ["0", "1", "t(1)", "t(1,0)", "1+1"]

    def test_unique_canonical_and_bounded(self):
        assert len(set(MEDIUM)) == len(MEDIUM)
        assert MEDIUM[0] == ZERO
        for a in MEDIUM:
            assert is_canonical(a)
            assert notation_size(a) <= 4
            assert vector_width(a) <= 3

    def test_counts_monotone(self):
        counts = {(n, k): sum(1 for _ in enumerate_notations(n, k))
                  for n in range(1, 5) for k in range(1, 4)}
        for (n, k), c in counts.items():
            if n > 1:
                assert counts[(n - 1, k)] <= c
            if k > 1:
                assert counts[(n, k - 1)] <= c

    def test_small_universe_size(self):
        assert len(SMALL) == 25

    def test_rejects_empty_bounds(self):
        with pytest.raises(ValueError):
            list(enumerate_notations(0, 1))
        with pytest.raises(ValueError):
            list(enumerate_notations(1, 0))


@pytest.fixture(scope='module')
def universe():
    return list(enumerate_notations(ORDINAL_MAX_NODES, ORDINAL_MAX_VECTOR_LEN))


@pytest.mark.slow
class TestAcceptanceScale:
    """Full notation universe: sorted chains, sampled pairs and seeded triples"""

    def test_sorted_universe_is_strictly_increasing(self, universe):
        ordered = sorted(universe)
        for a, b in zip(ordered, ordered[1:]):
            assert compare(a, b) == Ordering.LESS

    def test_plus_images_increase_along_sorted_universe(self, universe):
        images = [plus_map(a) for a in sorted(universe)]
        for a, b in zip(images, images[1:]):
            assert compare(a, b) == Ordering.LESS

    def test_sampled_transitivity_and_embedding(self, universe):
        rng = np.random.default_rng(DEFAULT_SEED)
        n = len(universe)
        for i, j, k in rng.integers(0, n, size=(TRANSITIVITY_TRIPLES, 3)):
            a, b, c = universe[i], universe[j], universe[k]
            if a < b and b < c:
                assert a < c
            assert compare(a, b) == compare(plus_map(a), plus_map(b))
