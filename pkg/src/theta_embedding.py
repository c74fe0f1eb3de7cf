"""
Theta Embedding Module
The signature F_k, the denotation of ground terms as ordinal notations, the
induced order on terms, per-symbol argument orders and the term_of construction
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional

from config import F_PREFIX, G_SYMBOL, ONE_SYMBOL
from errors import NoArgOrder, VectorTooLong, WrongSignature
from ordinals import (ONE, OrdinalNotation, Theta, Zero, components, natural_sum,
                      natural_sum_all, ord_lt, vector_width)
from order_extensions import OrderOracle, lex_order, pair_multiset_order
from terms import FunctionSymbol, Signature, Term, check_term, make_signature


@dataclass(frozen=True)
class EmbeddingContext:
    """
    F_k = {f_0, ..., f_k} + {g, 1} with ar(f_i) = i+1, ar(g) = 2, ar(1) = 0

    f_i(t_i, ..., t_0): the FIRST argument carries the highest exponent.
    """
    k: int
    signature: Signature

    @property
    def g(self) -> FunctionSymbol:
        return self.signature.get(G_SYMBOL)

    @property
    def one(self) -> FunctionSymbol:
        return self.signature.get(ONE_SYMBOL)

    def f(self, i: int) -> FunctionSymbol:
        if not 0 <= i <= self.k:
            raise WrongSignature(f"f_{i} is not in F_{self.k}")
        return self.signature.get(f"{F_PREFIX}{i}")

    def f_index(self, symbol: FunctionSymbol) -> Optional[int]:
        """i for f_i, None for g and 1"""
        if symbol.name.startswith(F_PREFIX):
            return int(symbol.name[len(F_PREFIX):])
        return None


def build_context(k: int) -> EmbeddingContext:
    """
    Build F_k with symbols in the order f_0, ..., f_k, g, 1

    Args:
        k: Largest f-index (>= 0)
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    specs = [(f"{F_PREFIX}{i}", i + 1) for i in range(k + 1)]
    specs += [(G_SYMBOL, 2), (ONE_SYMBOL, 0)]
    return EmbeddingContext(k, make_signature(specs))


@lru_cache(maxsize=1 << 18)
def _denote(t: Term) -> OrdinalNotation:
    name = t.head.name
    if name == ONE_SYMBOL:
        return ONE
    if name == G_SYMBOL:
        return natural_sum(_denote(t.args[0]), _denote(t.args[1]))
    # denotations are never Zero, so the f_i vector is already canonical
    return Theta(tuple(_denote(a) for a in t.args))


def denote(ctx: EmbeddingContext, t: Term) -> OrdinalNotation:
    """
    o(1) = 1, o(g(t,s)) = o(t) # o(s),
    o(f_i(t_i,...,t_0)) = theta(Omega^i o(t_i) + ... + Omega^0 o(t_0))

    Raises:
        WrongSignature: if t uses symbols outside ctx.signature
    """
    check_term(t, ctx.signature)
    return _denote(t)


def theta_order_lt(ctx: EmbeddingContext, t: Term, s: Term) -> bool:
    """t < s iff o(t) < o(s)"""
    return ord_lt(denote(ctx, t), denote(ctx, s))


def same_denotation(ctx: EmbeddingContext, t: Term, s: Term) -> bool:
    return denote(ctx, t) == denote(ctx, s)


def theta_order(ctx: EmbeddingContext) -> OrderOracle:
    """
    The order t < s iff o(t) < o(s); its `eq` identifies terms with the
    same denotation, so <= is o(t) <= o(s)
    """
    return OrderOracle(lambda t, s: theta_order_lt(ctx, t, s),
                       eq=lambda t, s: same_denotation(ctx, t, s),
                       name=f"theta(F_{ctx.k})")


def arg_order(ctx: EmbeddingContext, symbol: FunctionSymbol) -> OrderOracle:
    """
    Argument-tuple order for a symbol: lexicographic over the term order
    for f_i, the pair multiset extension for g

    Raises:
        NoArgOrder: for the constant 1
        WrongSignature: for a symbol outside F_k
    """
    if symbol not in ctx.signature:
        raise WrongSignature(f"symbol {symbol} is not in F_{ctx.k}")
    if symbol.arity == 0:
        raise NoArgOrder(f"constant {symbol.name} has no argument order")
    base = theta_order(ctx)
    if symbol.name == G_SYMBOL:
        return pair_multiset_order(base, name='mul(theta)')
    return lex_order(base, name='lex(theta)')


def arg_orders(ctx: EmbeddingContext) -> Dict[FunctionSymbol, OrderOracle]:
    return {s: arg_order(ctx, s) for s in ctx.signature if s.arity > 0}


def term_of(ctx: EmbeddingContext, a: OrdinalNotation) -> Term:
    """
    A term t with o(t) = a+

    Zero becomes the constant 1; a sum c_1 >= ... >= c_m becomes
    g(term_of(c_1), term_of(c_2 # ... # c_m)); a theta-term with vector
    (a_i, ..., a_0) becomes f_i(term_of(a_i), ..., term_of(a_0)).

    Raises:
        VectorTooLong: if some theta-vector inside a is longer than k+1
    """
    width = vector_width(a)
    if width > ctx.k + 1:
        raise VectorTooLong(f"vector of length {width} does not fit F_{ctx.k} (max {ctx.k + 1})")
    return _term_of(ctx, a)


def _term_of(ctx: EmbeddingContext, a: OrdinalNotation) -> Term:
    if isinstance(a, Zero):
        return Term(ctx.one, ())
    if isinstance(a, Theta):
        symbol = ctx.f(len(a.coeffs) - 1)
        return Term(symbol, tuple(_term_of(ctx, c) for c in a.coeffs))
    head, *tail = components(a)
    return Term(ctx.g, (_term_of(ctx, head), _term_of(ctx, natural_sum_all(tail))))
