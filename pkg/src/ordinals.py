"""
Ordinal Notation Module
Canonical notations below theta(Omega^(k+1)): comparison, natural sum, the plus map,
text grammar and bounded enumeration

Text grammar (theta is spelled `t`, Omega is implicit in vector positions):

    ord   := summand ('+' summand)*
    summand := '0' | '1' | 't(' ord (',' ord)* ')'

t(c_i,...,c_0) lists coefficients from the highest exponent down; `+` is the
natural sum.
"""

import enum
import re
from dataclasses import dataclass, field
from functools import cmp_to_key, lru_cache, total_ordering
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from errors import NonCanonicalInput, ParseError

_CACHE_SIZE = 1 << 20


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def from_int(cls, value: int) -> 'Ordering':
        return cls((value > 0) - (value < 0))


@total_ordering
class OrdinalNotation:
    """Common base: Python comparison and `+` follow compare / natural_sum"""

    def __lt__(self, other):
        if not isinstance(other, OrdinalNotation):
            return NotImplemented
        return _cmp(self, other) < 0

    def __add__(self, other):
        if not isinstance(other, OrdinalNotation):
            return NotImplemented
        return natural_sum(self, other)

    def __str__(self) -> str:
        return format_ordinal(self)


@dataclass(frozen=True, eq=True)
class Zero(OrdinalNotation):
    def __hash__(self) -> int:
        return 0

    def __repr__(self) -> str:
        return 'Zero()'


@dataclass(frozen=True, eq=True)
class Theta(OrdinalNotation):
    """theta(Omega^i c_i + ... + Omega^0 c_0), coefficients highest exponent first"""
    coeffs: Tuple[OrdinalNotation, ...]
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(self.coeffs))
        object.__setattr__(self, '_hash', hash(('t', self.coeffs)))

    def __hash__(self) -> int:
        return self._hash

    def padded(self, length: int) -> Tuple[OrdinalNotation, ...]:
        return (ZERO,) * (length - len(self.coeffs)) + self.coeffs


@dataclass(frozen=True, eq=True)
class Sum(OrdinalNotation):
    """Natural sum of at least two theta-terms, nonincreasing"""
    components: Tuple[Theta, ...]
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'components', tuple(self.components))
        object.__setattr__(self, '_hash', hash(('+', self.components)))

    def __hash__(self) -> int:
        return self._hash


ZERO = Zero()
ONE = Theta((ZERO,))


def one() -> Theta:
    """The least nonzero notation, theta of the vector [0]"""
    return ONE


def components(a: OrdinalNotation) -> Tuple[Theta, ...]:
    """Additive components: () for Zero, (a,) for a theta-term"""
    if isinstance(a, Sum):
        return a.components
    if isinstance(a, Theta):
        return (a,)
    return ()


def _from_components(parts: Sequence[Theta]) -> OrdinalNotation:
    parts = sorted(parts, key=cmp_to_key(_cmp), reverse=True)
    if not parts:
        return ZERO
    if len(parts) == 1:
        return parts[0]
    return Sum(tuple(parts))


# ===== CONSTRUCTION =====

def theta(coeffs: Sequence[OrdinalNotation]) -> Theta:
    """
    Canonical theta-term; leading Zero coefficients are stripped

    Args:
        coeffs: Coefficient vector, highest exponent first (non-empty)
    """
    coeffs = tuple(coeffs)
    if not coeffs:
        raise ValueError("theta needs at least one coefficient")
    start = 0
    while start < len(coeffs) - 1 and isinstance(coeffs[start], Zero):
        start += 1
    return Theta(coeffs[start:])


def natural_sum(a: OrdinalNotation, b: OrdinalNotation) -> OrdinalNotation:
    """a # b: merge the component multisets; Zero is the identity"""
    if isinstance(a, Zero):
        return b
    if isinstance(b, Zero):
        return a
    return _from_components(components(a) + components(b))


def natural_sum_all(items: Sequence[OrdinalNotation]) -> OrdinalNotation:
    parts: List[Theta] = []
    for item in items:
        parts.extend(components(item))
    return _from_components(parts)


def from_int(n: int) -> OrdinalNotation:
    """The natural number n as 1+...+1"""
    if n < 0:
        raise ValueError("natural numbers only")
    return _from_components([ONE] * n)


# ===== CANONICAL FORMS =====

@lru_cache(maxsize=_CACHE_SIZE)
def is_canonical(a: OrdinalNotation) -> bool:
    if isinstance(a, Zero):
        return True
    if isinstance(a, Theta):
        if not a.coeffs:
            return False
        if len(a.coeffs) > 1 and isinstance(a.coeffs[0], Zero):
            return False
        return all(is_canonical(c) for c in a.coeffs)
    if isinstance(a, Sum):
        parts = a.components
        if len(parts) < 2 or not all(isinstance(p, Theta) and is_canonical(p) for p in parts):
            return False
        return all(_cmp(parts[i], parts[i + 1]) >= 0 for i in range(len(parts) - 1))
    return False


def _require_canonical(a: OrdinalNotation) -> None:
    if not isinstance(a, OrdinalNotation) or not is_canonical(a):
        raise NonCanonicalInput(f"not a canonical notation: {a!r}")


# ===== COMPARISON =====

def _lex_cmp(xs: Sequence[OrdinalNotation], ys: Sequence[OrdinalNotation]) -> int:
    for x, y in zip(xs, ys):
        c = _cmp(x, y)
        if c:
            return c
    return 0


def _theta_lt(a: Theta, b: Theta) -> bool:
    # a <= b_j for some coefficient b_j of b
    for bj in b.coeffs:
        if _cmp(a, bj) <= 0:
            return True
    # every a_j below b, and the padded vectors lexicographically below
    if all(_cmp(aj, b) < 0 for aj in a.coeffs):
        width = max(len(a.coeffs), len(b.coeffs))
        return _lex_cmp(a.padded(width), b.padded(width)) < 0
    return False


@lru_cache(maxsize=_CACHE_SIZE)
def _cmp_theta(a: Theta, b: Theta) -> int:
    if a == b:
        return 0
    # equal up to leading Zero padding
    width = max(len(a.coeffs), len(b.coeffs))
    if _lex_cmp(a.padded(width), b.padded(width)) == 0:
        return 0
    if _theta_lt(a, b):
        return -1
    if _theta_lt(b, a):
        return 1
    raise NonCanonicalInput(f"incomparable theta-terms {format_ordinal(a)} and {format_ordinal(b)}")


@lru_cache(maxsize=_CACHE_SIZE)
def _cmp(a: OrdinalNotation, b: OrdinalNotation) -> int:
    if a is b or a == b:
        return 0
    if isinstance(a, Zero):
        return -1
    if isinstance(b, Zero):
        return 1
    ca, cb = components(a), components(b)
    for x, y in zip(ca, cb):
        c = _cmp_theta(x, y)
        if c:
            return c
    return (len(ca) > len(cb)) - (len(ca) < len(cb))


def compare(a: OrdinalNotation, b: OrdinalNotation) -> Ordering:
    """
    Compare two canonical notations

    Theta-terms follow the recursive rule: a < b iff a <= b_j for some
    coefficient b_j, or every a_j < b and the (padded) coefficient vectors
    are lexicographically smaller. Sums compare componentwise with a strict
    prefix being smaller; Zero is least.

    Raises:
        NonCanonicalInput: if either argument is not canonical
    """
    _require_canonical(a)
    _require_canonical(b)
    return Ordering.from_int(_cmp(a, b))


def ord_lt(a: OrdinalNotation, b: OrdinalNotation) -> bool:
    return _cmp(a, b) < 0


def ord_le(a: OrdinalNotation, b: OrdinalNotation) -> bool:
    return _cmp(a, b) <= 0


# ===== PLUS MAP =====

@lru_cache(maxsize=_CACHE_SIZE)
def plus_map(a: OrdinalNotation) -> OrdinalNotation:
    """
    Replace every Zero by 1: 0+ = 1, (a#b)+ = a+ # b+, and theta-terms map
    coefficientwise on their full vector (1 = t(0) itself becomes t(1))
    """
    if isinstance(a, Zero):
        return ONE
    if isinstance(a, Theta):
        return Theta(tuple(plus_map(c) for c in a.coeffs))
    return _from_components([plus_map(c) for c in a.components])


# ===== MEASURES =====

@lru_cache(maxsize=_CACHE_SIZE)
def notation_size(a: OrdinalNotation) -> int:
    """Number of theta constructors (1 counts as one node, Zero as none)"""
    if isinstance(a, Zero):
        return 0
    if isinstance(a, Theta):
        return 1 + sum(notation_size(c) for c in a.coeffs)
    return sum(notation_size(c) for c in a.components)


@lru_cache(maxsize=_CACHE_SIZE)
def vector_width(a: OrdinalNotation) -> int:
    """Longest theta coefficient vector occurring in a (0 for Zero)"""
    if isinstance(a, Zero):
        return 0
    if isinstance(a, Theta):
        return max([len(a.coeffs)] + [vector_width(c) for c in a.coeffs])
    return max(vector_width(c) for c in a.components)


def contains_zero_outside_one(a: OrdinalNotation) -> bool:
    """True if a Zero occurs anywhere other than as the coefficient of a 1"""
    if isinstance(a, Zero):
        return True
    if a == ONE:
        return False
    if isinstance(a, Theta):
        return any(contains_zero_outside_one(c) for c in a.coeffs)
    return any(contains_zero_outside_one(c) for c in a.components)


# ===== TEXT FORMAT =====

def format_ordinal(a: OrdinalNotation) -> str:
    if isinstance(a, Zero):
        return '0'
    if a == ONE:
        return '1'
    if isinstance(a, Theta):
        return 't(' + ','.join(format_ordinal(c) for c in a.coeffs) + ')'
    return '+'.join(format_ordinal(c) for c in a.components)


_ORD_TOKEN = re.compile(r'\s*([t01(),+])')


class _OrdinalParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _ORD_TOKEN.match(text, pos)
            if m is None:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            self.tokens.append((m.group(1), m.start(1)))
            pos = m.end()
        self.i = 0

    def _peek(self) -> Tuple[str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ('', len(self.text))

    def parse(self) -> OrdinalNotation:
        result = self._ord()
        tok, pos = self._peek()
        if tok:
            raise ParseError(f"trailing input {tok!r}", pos)
        return result

    def _ord(self) -> OrdinalNotation:
        result = self._summand()
        while self._peek()[0] == '+':
            self.i += 1
            result = natural_sum(result, self._summand())
        return result

    def _summand(self) -> OrdinalNotation:
        tok, pos = self._peek()
        if tok == '0':
            self.i += 1
            return ZERO
        if tok == '1':
            self.i += 1
            return ONE
        if tok == 't':
            self.i += 1
            tok, pos = self._peek()
            if tok != '(':
                raise ParseError(f"expected '(' after 't', found {tok or 'end of input'!r}", pos)
            self.i += 1
            coeffs = [self._ord()]
            while self._peek()[0] == ',':
                self.i += 1
                coeffs.append(self._ord())
            tok, pos = self._peek()
            if tok != ')':
                raise ParseError(f"expected ')', found {tok or 'end of input'!r}", pos)
            self.i += 1
            return theta(coeffs)
        raise ParseError(f"expected '0', '1' or 't', found {tok or 'end of input'!r}", pos)


def parse_ordinal(text: str) -> OrdinalNotation:
    """
    Parse the ordinal grammar into a canonical notation

    Raises:
        ParseError: with the character position of the offending token
    """
    return _OrdinalParser(text).parse()


# ===== ENUMERATION =====

def _weak_splits(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered splits of total into `parts` non-negative sizes"""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_splits(total - first, parts - 1):
            yield (first,) + rest


class NotationEnumerator:
    """
    Builds canonical notations by node count, reusing smaller sizes

    Args:
        max_vector_len: Longest theta vector allowed
    """

    def __init__(self, max_vector_len: int):
        if max_vector_len < 1:
            raise ValueError("max_vector_len must be at least 1")
        self.max_vector_len = max_vector_len
        self._thetas: Dict[int, List[Theta]] = {}
        self._ordinals: Dict[int, List[OrdinalNotation]] = {0: [ZERO]}

    def thetas(self, n: int) -> List[Theta]:
        """Theta-terms with exactly n nodes"""
        if n < 1:
            return []
        if n in self._thetas:
            return self._thetas[n]
        found: List[Theta] = []
        inner = n - 1
        for length in range(1, self.max_vector_len + 1):
            for sizes in _weak_splits(inner, length):
                if length > 1 and sizes[0] == 0:
                    continue
                for coeffs in product(*(self.ordinals(s) for s in sizes)):
                    found.append(Theta(coeffs))
        self._thetas[n] = found
        return found

    def _multisets(self, total: int, max_part: int, start: int,
                   pool: List[Theta]) -> Iterator[List[Theta]]:
        if total == 0:
            yield []
            return
        for idx in range(start, len(pool)):
            part = pool[idx]
            s = notation_size(part)
            if s <= total and s <= max_part:
                for rest in self._multisets(total - s, max_part, idx, pool):
                    yield [part] + rest

    def ordinals(self, n: int) -> List[OrdinalNotation]:
        """All canonical notations with exactly n nodes"""
        if n in self._ordinals:
            return self._ordinals[n]
        found: List[OrdinalNotation] = list(self.thetas(n))
        pool = [t for s in range(1, n) for t in self.thetas(s)]
        for parts in self._multisets(n, n - 1, 0, pool):
            if len(parts) >= 2:
                found.append(_from_components(parts))
        self._ordinals[n] = found
        return found

    def up_to(self, max_nodes: int) -> Iterator[OrdinalNotation]:
        for n in range(0, max_nodes + 1):
            yield from self.ordinals(n)


def enumerate_notations(max_nodes: int, max_vector_len: int) -> Iterator[OrdinalNotation]:
    """
    Stream every canonical notation with at most max_nodes theta-nodes and
    theta-vectors no longer than max_vector_len, each exactly once

    Returns:
        Iterator by node count; Zero first
    """
    if max_nodes < 1:
        raise ValueError("max_nodes must be at least 1")
    return NotationEnumerator(max_vector_len).up_to(max_nodes)
