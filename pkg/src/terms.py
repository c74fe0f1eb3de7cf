"""
Term Core Module
Finite signatures, ground terms, subterms, parsing/printing and size-bounded enumeration
"""

import json
import re
import warnings
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from errors import (ArityMismatch, DuplicateSymbol, EmptySignature, InvalidSymbol,
                    NoConstantWarning, ParseError, UnknownSymbol, WrongSignature)

IDENTIFIER = re.compile(r'[A-Za-z0-9][A-Za-z0-9_]*')
_TOKEN = re.compile(r'\s*(?:(?P<ident>[A-Za-z0-9][A-Za-z0-9_]*)|(?P<punct>[(),]))')


@dataclass(frozen=True)
class FunctionSymbol:
    """A function symbol with a fixed arity"""
    name: str
    arity: int

    def __post_init__(self):
        if not isinstance(self.name, str) or not IDENTIFIER.fullmatch(self.name):
            raise InvalidSymbol(f"invalid symbol name {self.name!r}")
        if not isinstance(self.arity, int) or self.arity < 0:
            raise InvalidSymbol(f"invalid arity {self.arity!r} for {self.name}")

    def __str__(self) -> str:
        return f"{self.name}/{self.arity}"


@dataclass(frozen=True)
class Signature:
    """
    Ordered, finite set of function symbols

    The position of a symbol in `symbols` is its index; enumeration order
    and the JSON file format both follow it.
    """
    symbols: Tuple[FunctionSymbol, ...]
    _by_name: Dict[str, FunctionSymbol] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, 'symbols', symbols)
        if not symbols:
            raise EmptySignature("a signature needs at least one symbol")

        by_name: Dict[str, FunctionSymbol] = {}
        for symbol in symbols:
            if symbol.name in by_name:
                raise DuplicateSymbol(f"symbol {symbol.name!r} declared twice")
            by_name[symbol.name] = symbol
        object.__setattr__(self, '_by_name', by_name)

        if not any(symbol.arity == 0 for symbol in symbols):
            warnings.warn(
                f"signature {self} has no constant; it has no ground terms",
                NoConstantWarning,
                stacklevel=3,
            )

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[FunctionSymbol]:
        return iter(self.symbols)

    def __contains__(self, symbol: FunctionSymbol) -> bool:
        return self._by_name.get(symbol.name) == symbol

    def __str__(self) -> str:
        return '{' + ', '.join(str(s) for s in self.symbols) + '}'

    def get(self, name: str) -> FunctionSymbol:
        """
        Look up a symbol by name

        Raises:
            UnknownSymbol: if no symbol has that name
        """
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownSymbol(f"unknown symbol {name!r}") from None

    def index(self, symbol: FunctionSymbol) -> int:
        return self.symbols.index(symbol)

    @property
    def constants(self) -> List[FunctionSymbol]:
        return [s for s in self.symbols if s.arity == 0]

    @property
    def max_arity(self) -> int:
        return max(s.arity for s in self.symbols)


@dataclass(frozen=True)
class Term:
    """
    Ground term: a head symbol applied to exactly head.arity arguments

    Terms are immutable; hash and size are computed once at construction.
    """
    head: FunctionSymbol
    args: Tuple['Term', ...] = ()
    size: int = field(init=False, repr=False, compare=False)
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        args = tuple(self.args)
        object.__setattr__(self, 'args', args)
        if len(args) != self.head.arity:
            raise ArityMismatch(
                f"{self.head.name} expects {self.head.arity} argument(s), got {len(args)}"
            )
        object.__setattr__(self, 'size', 1 + sum(a.size for a in args))
        object.__setattr__(self, '_hash', hash((self.head, args)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_term(self)


SymbolSpec = Union[Tuple[str, int], FunctionSymbol]


def make_signature(symbols: Sequence[SymbolSpec]) -> Signature:
    """
    Build a validated signature from (name, arity) pairs

    Args:
        symbols: Ordered (name, arity) pairs or FunctionSymbol objects

    Returns:
        Signature in the given order

    Raises:
        EmptySignature, DuplicateSymbol, InvalidSymbol
    """
    built = []
    for spec in symbols:
        if isinstance(spec, FunctionSymbol):
            built.append(spec)
        else:
            name, arity = spec
            built.append(FunctionSymbol(name, arity))
    return Signature(tuple(built))


def load_signature(path: Union[str, Path]) -> Signature:
    """
    Read a signature file `{"symbols": [{"name": ..., "arity": ...}, ...]}`
    """
    with open(path, 'r', encoding='utf-8') as f:
        payload = json.load(f)
    try:
        entries = payload['symbols']
        return make_signature([(e['name'], e['arity']) for e in entries])
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed signature file {path}: {e}") from None


def save_signature(sig: Signature, path: Union[str, Path]) -> None:
    payload = {'symbols': [{'name': s.name, 'arity': s.arity} for s in sig]}
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(payload, f, indent=2)


def check_term(t: Term, sig: Signature) -> None:
    """
    Raise WrongSignature if any node of t uses a symbol foreign to sig
    """
    stack = [t]
    while stack:
        node = stack.pop()
        if node.head not in sig:
            raise WrongSignature(f"symbol {node.head} is not in signature {sig}")
        stack.extend(node.args)


# ===== PARSING / PRINTING =====

class _TermParser:
    def __init__(self, text: str, sig: Signature):
        self.text = text
        self.sig = sig
        self.tokens = self._tokenize(text)
        self.i = 0

    @staticmethod
    def _tokenize(text: str) -> List[Tuple[str, int]]:
        tokens = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            tok = m.group('ident') or m.group('punct')
            tokens.append((tok, m.start(m.lastgroup)))
            pos = m.end()
        return tokens

    def _peek(self) -> Tuple[str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ('', len(self.text))

    def _expect(self, tok: str) -> None:
        got, pos = self._peek()
        if got != tok:
            raise ParseError(f"expected {tok!r}, found {got or 'end of input'!r}", pos)
        self.i += 1

    def parse(self) -> Term:
        term = self._term()
        tok, pos = self._peek()
        if tok:
            raise ParseError(f"trailing input {tok!r}", pos)
        return term

    def _term(self) -> Term:
        name, pos = self._peek()
        if not name or not IDENTIFIER.fullmatch(name):
            raise ParseError(f"expected a symbol, found {name or 'end of input'!r}", pos)
        self.i += 1
        symbol = self.sig.get(name)
        args: List[Term] = []
        if self._peek()[0] == '(':
            self.i += 1
            args.append(self._term())
            while self._peek()[0] == ',':
                self.i += 1
                args.append(self._term())
            self._expect(')')
        if len(args) != symbol.arity:
            raise ArityMismatch(
                f"{name} expects {symbol.arity} argument(s), got {len(args)} (position {pos})"
            )
        return Term(symbol, tuple(args))


def parse_term(text: str, sig: Signature) -> Term:
    """
    Parse `term := ident | ident '(' term (',' term)* ')'` over sig

    Raises:
        ParseError: on malformed text (with character position)
        UnknownSymbol: on a name not in sig
        ArityMismatch: on a wrong argument count
    """
    return _TermParser(text, sig).parse()


def format_term(t: Term) -> str:
    """Canonical text form; round-trips through parse_term"""
    if not t.args:
        return t.head.name
    return f"{t.head.name}({','.join(format_term(a) for a in t.args)})"


# ===== STRUCTURE =====

def term_size(t: Term) -> int:
    """Number of nodes in t"""
    return t.size


def proper_subterms(t: Term) -> List[Term]:
    """All subterm occurrences of t except t itself, in preorder"""
    result: List[Term] = []
    stack = list(reversed(t.args))
    while stack:
        node = stack.pop()
        result.append(node)
        stack.extend(reversed(node.args))
    return result


def term_depth(t: Term) -> int:
    if not t.args:
        return 1
    return 1 + max(term_depth(a) for a in t.args)


# ===== ENUMERATION =====

def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered splits of total into `parts` positive sizes, ascending lexicographically"""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class TermEnumerator:
    """
    Size-major enumeration of ground terms over a signature

    Terms of each size are built once from the smaller sizes and kept, so
    repeated calls with growing bounds reuse earlier work.
    """

    def __init__(self, sig: Signature):
        self.sig = sig
        self._by_size: Dict[int, List[Term]] = {}

    def of_size(self, n: int) -> List[Term]:
        """
        All terms with exactly n nodes, by symbol index then argument order
        """
        if n < 1:
            return []
        if n in self._by_size:
            return self._by_size[n]

        terms: List[Term] = []
        for symbol in self.sig:
            if symbol.arity == 0:
                if n == 1:
                    terms.append(Term(symbol, ()))
                continue
            for sizes in _compositions(n - 1, symbol.arity):
                pools = [self.of_size(s) for s in sizes]
                for args in product(*pools):
                    terms.append(Term(symbol, args))
        self._by_size[n] = terms
        return terms

    def up_to(self, max_size: int) -> Iterator[Term]:
        for n in range(1, max_size + 1):
            yield from self.of_size(n)


def enumerate_terms(sig: Signature, max_size: int) -> Iterator[Term]:
    """
    Stream every ground term over sig with at most max_size nodes

    Args:
        sig: Signature to enumerate over
        max_size: Node-count bound (>= 1)

    Returns:
        Iterator in nondecreasing size, deterministic within a size
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    return TermEnumerator(sig).up_to(max_size)


def count_terms(sig: Signature, max_size: int) -> List[int]:
    """
    Number of ground terms of each size 0..max_size by the size recurrence

    Independent of TermEnumerator; used as its completeness oracle.
    """
    counts = [0] * (max_size + 1)
    max_arity = sig.max_arity
    for n in range(1, max_size + 1):
        # tuples[j][m]: j-tuples of terms with total size m, sizes < n only
        tuples = [[0] * n for _ in range(max_arity + 1)]
        tuples[0][0] = 1
        for j in range(1, max_arity + 1):
            for m in range(1, n):
                tuples[j][m] = sum(tuples[j - 1][m - p] * counts[p] for p in range(1, m + 1))
        total = 0
        for symbol in sig:
            if symbol.arity == 0:
                total += 1 if n == 1 else 0
            elif n - 1 >= 1:
                total += tuples[symbol.arity][n - 1]
        counts[n] = total
    return counts


def small_signatures(max_symbols: int = 3, max_arity: int = 2) -> Iterator[Signature]:
    """
    One signature per multiset of arities with at least one constant,
    symbols named c0, c1, ... for constants and f0, f1, ... otherwise
    """
    for n in range(1, max_symbols + 1):
        for arities in combinations_with_replacement(range(max_arity + 1), n):
            if arities[0] != 0:
                continue
            specs = []
            for i, arity in enumerate(arities):
                specs.append((f"{'c' if arity == 0 else 'f'}{i}", arity))
            yield make_signature(specs)
