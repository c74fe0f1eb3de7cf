"""
Condition Checkers Module
Executable checks of the three well-foundedness conditions over bounded term
universes, a reference lexicographic path order, and descending-chain search

Every verdict is about the finite fragment examined, never about all terms.
"""

import enum
import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from config import *
from errors import ConfigError, InvalidPrecedence, MissingArgOrder
from order_extensions import (TUPLE_EXTENSIONS, NonAccessible, OrderOracle, TupleOrder,
                              Unknown, WfpResult, tuple_order, wfp_compute, wfp_ranked)
from terms import (FunctionSymbol, Signature, Term, check_term, format_term, parse_term,
                   proper_subterms)

CONDITION_TITLES = {
    0: 'proper order (irreflexive, transitive)',
    1: 'contains the subterm relation',
    2: 'decomposition: f(b) <= a_i for some i, or b <_f a',
    3: 'lifting: a within W(<) implies a within W(<_f)',
}

FRAGMENT_CAVEAT = ("bounded check: no counterexample in the examined universe; "
                   "this does not verify the condition for all terms")


# ===== LEXICOGRAPHIC PATH ORDER =====

@dataclass(frozen=True)
class Precedence:
    """
    Strict total order on a signature's symbols, lowest first
    """
    signature: Signature
    ranking: Tuple[FunctionSymbol, ...]
    _rank: Dict[FunctionSymbol, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ranking = tuple(self.ranking)
        object.__setattr__(self, 'ranking', ranking)
        if sorted(s.name for s in ranking) != sorted(s.name for s in self.signature):
            raise InvalidPrecedence(
                f"precedence must list every symbol of {self.signature} exactly once"
            )
        if len(set(ranking)) != len(ranking):
            raise InvalidPrecedence("precedence lists a symbol twice")
        object.__setattr__(self, '_rank', {s: i for i, s in enumerate(ranking)})

    @classmethod
    def from_names(cls, sig: Signature, names: Sequence[str]) -> 'Precedence':
        return cls(sig, tuple(sig.get(n) for n in names))

    def lt_symbol(self, f: FunctionSymbol, g: FunctionSymbol) -> bool:
        return self._rank[f] < self._rank[g]

    def __str__(self) -> str:
        return ' < '.join(s.name for s in self.ranking)


@lru_cache(maxsize=1 << 20)
def _lpo(prec: Precedence, s: Term, t: Term) -> bool:
    for tj in t.args:
        if s == tj or _lpo(prec, s, tj):
            return True
    if prec.lt_symbol(s.head, t.head):
        return all(_lpo(prec, si, t) for si in s.args)
    if s.head == t.head:
        for si, ti in zip(s.args, t.args):
            if si != ti:
                return _lpo(prec, si, ti) and all(_lpo(prec, x, t) for x in s.args)
    return False


def lpo_lt(prec: Precedence, s: Term, t: Term) -> bool:
    """
    Ground lexicographic path order: s < t iff s <= some argument of t, or
    head(s) < head(t) with every argument of s below t, or equal heads with
    lexicographically smaller arguments all below t

    Raises:
        WrongSignature: if either term leaves the precedence's signature
    """
    check_term(s, prec.signature)
    check_term(t, prec.signature)
    return _lpo(prec, s, t)


def lpo_order(prec: Precedence) -> OrderOracle:
    return OrderOracle(lambda s, t: lpo_lt(prec, s, t), name=f"lpo({prec})")


# ===== ARGUMENT ORDERS =====

ARG_ORDER_KINDS = TUPLE_EXTENSIONS


def make_arg_order(order: OrderOracle, kind: str,
                   extra: Iterable[Tuple[tuple, tuple]] = ()) -> TupleOrder:
    """
    Tuple order of the given kind over `order`, plus planted (b, a) edges
    meaning b <_f a

    Raises:
        ConfigError: for an unknown kind
    """
    if kind not in ARG_ORDER_KINDS:
        raise ConfigError(f"unknown argument order kind '{kind}' "
                          f"(expected one of {', '.join(ARG_ORDER_KINDS)})")
    return tuple_order(order, kind, extra)


def lex_arg_orders(order: OrderOracle, sig: Signature) -> Dict[FunctionSymbol, OrderOracle]:
    """Lexicographic argument order over `order` for every non-constant symbol"""
    lex = make_arg_order(order, 'lex')
    return {s: lex for s in sig if s.arity > 0}


def load_arg_orders(path: Union[str, Path], order: OrderOracle, sig: Signature,
                    defaults: Optional[Dict[FunctionSymbol, OrderOracle]] = None
                    ) -> Dict[FunctionSymbol, OrderOracle]:
    """
    Read per-symbol argument orders from JSON

    Format: {"g": {"kind": "lex", "extra": [[["a", "a"], ["a", "g(a,a)"]], ...]}}
    where each extra entry [b, a] plants b <_g a. Symbols not named keep
    their entry in `defaults`.

    Raises:
        ConfigError: on malformed content
        UnknownSymbol, ParseError, ArityMismatch: from the term texts
    """
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read argument orders from {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("argument-order file must hold a JSON object")

    result = dict(defaults or {})
    for name, entry in raw.items():
        symbol = sig.get(name)
        if symbol.arity == 0:
            raise ConfigError(f"constant {name} takes no argument order")
        if not isinstance(entry, dict):
            raise ConfigError(f"entry for {name} must be an object")
        extra = []
        for edge in entry.get('extra', []):
            if len(edge) != 2 or any(len(side) != symbol.arity for side in edge):
                raise ConfigError(f"planted edge {edge} does not match arity of {name}")
            b, a = (tuple(parse_term(x, sig) for x in side) for side in edge)
            extra.append((b, a))
        result[symbol] = make_arg_order(order, entry.get('kind', 'lex'), extra)
    return result

# ===== REPORTS =====

class Status(enum.Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    INCONCLUSIVE = 'INCONCLUSIVE'


def format_item(obj: Any) -> Any:
    """Printable form of witness parts: terms, symbols and tuples of them"""
    if isinstance(obj, Term):
        return format_term(obj)
    if isinstance(obj, FunctionSymbol):
        return obj.name
    if isinstance(obj, tuple):
        return '(' + ','.join(str(format_item(x)) for x in obj) + ')'
    if isinstance(obj, list):
        return [format_item(x) for x in obj]
    return obj


@dataclass
class ConditionReport:
    """
    Outcome of one bounded condition check

    `witness` keeps the actual objects so a Fail can be re-checked;
    to_dict() renders them as text.
    """
    condition: int
    status: Status
    pairs_checked: int
    universe_size: int
    budget_used: int = 0
    witness: Optional[Dict[str, Any]] = None
    note: str = ''
    seed: Optional[int] = None
    order_name: str = ''

    @property
    def title(self) -> str:
        return CONDITION_TITLES[self.condition]

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            'condition': self.condition,
            'status': self.status.value,
            'pairs_checked': self.pairs_checked,
            'universe_size': self.universe_size,
            'budget_used': self.budget_used,
        }
        if self.witness is not None:
            payload['witness'] = {k: format_item(v) for k, v in self.witness.items()}
        if self.seed is not None:
            payload['seed'] = self.seed
        if self.note:
            payload['note'] = self.note
        if self.order_name:
            payload['order'] = self.order_name
        return payload


def reports_to_frame(reports: Iterable[ConditionReport]) -> pd.DataFrame:
    rows = []
    for r in reports:
        rows.append({
            'condition': r.condition,
            'title': r.title,
            'order': r.order_name,
            'status': r.status.value,
            'pairs_checked': r.pairs_checked,
            'universe_size': r.universe_size,
            'budget_used': r.budget_used,
            'witness': None if r.witness is None else str(r.to_dict()['witness']),
            'note': r.note,
        })
    return pd.DataFrame(rows)


# ===== CONDITION CHECKS =====

def check_subterm_condition(order: OrderOracle, universe: Sequence[Term]) -> ConditionReport:
    """
    Condition 1: every proper subterm s of every t in the universe has s < t

    Fail carries the first violating (subterm, term) in universe order.
    """
    pairs = 0
    for t in universe:
        for s in proper_subterms(t):
            pairs += 1
            if not order.lt(s, t):
                return ConditionReport(1, Status.FAIL, pairs, len(universe),
                                       witness={'subterm': s, 'term': t},
                                       order_name=order.name)
    return ConditionReport(1, Status.PASS, pairs, len(universe),
                           note=FRAGMENT_CAVEAT, order_name=order.name)


def _require_arg_orders(arg_orders: Dict[FunctionSymbol, OrderOracle],
                        universe: Sequence[Term]) -> None:
    for t in universe:
        if t.head.arity > 0 and t.head not in arg_orders:
            raise MissingArgOrder(f"no argument order for {t.head}")


def check_decomposition_condition(order: OrderOracle,
                                  arg_orders: Dict[FunctionSymbol, OrderOracle],
                                  universe: Sequence[Term]) -> ConditionReport:
    """
    Condition 2: whenever f(b) < f(a) in the universe, either f(b) <= a_i for
    some component a_i, or b <_f a

    Raises:
        MissingArgOrder: if a non-constant head in the universe has no order
    """
    _require_arg_orders(arg_orders, universe)
    by_head: Dict[FunctionSymbol, List[Term]] = {}
    for t in universe:
        if t.head.arity > 0:
            by_head.setdefault(t.head, []).append(t)

    pairs = 0
    for symbol, terms in by_head.items():
        f_order = arg_orders[symbol]
        for fb, fa in product(terms, terms):
            pairs += 1
            if not order.lt(fb, fa):
                continue
            if any(order.le(fb, ai) for ai in fa.args):
                continue
            if f_order.lt(fb.args, fa.args):
                continue
            return ConditionReport(2, Status.FAIL, pairs, len(universe),
                                   witness={'symbol': symbol, 'b': fb.args, 'a': fa.args},
                                   order_name=order.name)
    return ConditionReport(2, Status.PASS, pairs, len(universe),
                           note=FRAGMENT_CAVEAT, order_name=order.name)


LIFTING_SCOPE = ("tuple predecessors range over the universe's tuples only, "
                 "so no predecessor-outside-universe classification arises")


def order_matrices(order: OrderOracle, items: Sequence) -> Tuple[np.ndarray, np.ndarray]:
    """
    lt[i, j] = items[i] < items[j] and eq[i, j] = items[i] == items[j]
    under the oracle, one call per pair
    """
    n = len(items)
    lt = np.zeros((n, n), dtype=bool)
    eq = np.zeros((n, n), dtype=bool)
    for i, x in enumerate(items):
        for j, y in enumerate(items):
            lt[i, j] = order.lt(x, y)
            eq[i, j] = order.eq(x, y)
    return lt, eq


class TupleGrid:
    """
    Predecessor masks of an argument order over all arity-tuples of a
    universe, flattened in itertools.product order

    Lexicographic, reversed lexicographic and pair multiset orders are
    evaluated by broadcasting columns of the base matrices; other kinds go
    tuple by tuple through an index-level oracle, and orders of unknown
    construction through the oracle itself, cached per tuple.
    """

    def __init__(self, f_order: OrderOracle, terms: Sequence[Term], arity: int,
                 matrices: Callable[[OrderOracle], Tuple[np.ndarray, np.ndarray]]):
        self.f_order = f_order
        self.terms = list(terms)
        self.n = len(self.terms)
        self.arity = arity
        self.shape = (self.n,) * arity
        self.size = self.n ** arity
        self.tuples = list(product(self.terms, repeat=arity))
        self.planted: Dict[int, List[int]] = {}
        self._cache: Dict[int, np.ndarray] = {}
        self.fast = False

        if isinstance(f_order, TupleOrder) and f_order.base is not None:
            self.lt, self.eq = matrices(f_order.base)
            self.fast = f_order.kind in ('lex', 'revlex') or \
                (f_order.kind == 'mul' and arity == 2)
            index = {t: i for i, t in enumerate(self.terms)}
            for b, a in f_order.planted:
                if len(a) == arity and len(b) == arity and \
                        all(x in index for x in a + b):
                    flat_a = int(np.ravel_multi_index([index[x] for x in a], self.shape))
                    flat_b = int(np.ravel_multi_index([index[x] for x in b], self.shape))
                    self.planted.setdefault(flat_a, []).append(flat_b)

    def axis(self, column: np.ndarray, pos: int) -> np.ndarray:
        shape = [1] * self.arity
        shape[pos] = self.n
        return column.reshape(shape)

    def _lex(self, a: Sequence[int], positions: Sequence[int]) -> np.ndarray:
        mask = np.zeros((1,) * self.arity, dtype=bool)
        for p in reversed(positions):
            lt = self.axis(self.lt[:, a[p]], p)
            eq = self.axis(self.eq[:, a[p]], p)
            mask = (lt & ~eq) | (eq & mask)
        return mask

    def _pair_multiset(self, a: Sequence[int]) -> np.ndarray:
        lt0, lt1 = self.lt[:, a[0]], self.lt[:, a[1]]
        le0, le1 = lt0 | self.eq[:, a[0]], lt1 | self.eq[:, a[1]]
        x = lambda col: self.axis(col, 0)
        y = lambda col: self.axis(col, 1)
        return ((x(lt0) & y(le1)) | (x(lt1) & y(le0)) |
                (x(le1) & y(lt0)) | (x(le0) & y(lt1)) |
                (x(lt0) & y(lt0)) | (x(lt1) & y(lt1)))

    def _by_tuple(self, flat: int) -> np.ndarray:
        if flat not in self._cache:
            if isinstance(self.f_order, TupleOrder) and self.f_order.base is not None:
                extend = TUPLE_EXTENSIONS[self.f_order.kind]
                lt, eq = self.lt, self.eq
                index_base = OrderOracle(lambda i, j: bool(lt[i, j]),
                                         eq=lambda i, j: bool(eq[i, j]))
                a = tuple(int(i) for i in np.unravel_index(flat, self.shape))
                if self.f_order.kind == 'mul' and self.arity != 2:
                    values = (False for _ in range(self.size))
                else:
                    values = (extend(index_base, b, a)
                              for b in product(range(self.n), repeat=self.arity))
            else:
                target = self.tuples[flat]
                values = (self.f_order.lt(b, target) for b in self.tuples)
            self._cache[flat] = np.fromiter(values, dtype=bool, count=self.size)
        return self._cache[flat].copy()

    def predecessors(self, flat: int) -> np.ndarray:
        """Boolean mask over flat tuple indices of everything below tuple `flat`"""
        if not self.fast:
            mask = self._by_tuple(flat)
        else:
            a = [int(i) for i in np.unravel_index(flat, self.shape)]
            if self.f_order.kind == 'mul':
                mask = self._pair_multiset(a)
            elif self.f_order.kind == 'revlex':
                mask = self._lex(a, list(reversed(range(self.arity))))
            else:
                mask = self._lex(a, list(range(self.arity)))
            mask = np.broadcast_to(mask, self.shape).ravel().copy()
        for b in self.planted.get(flat, ()):
            mask[b] = True
        return mask

    def classify(self, visit_order: Sequence[int], budget: int) -> WfpResult:
        result = wfp_ranked(self.predecessors, visit_order, self.size, budget)
        if result is None:
            result = wfp_compute(lambda x: np.flatnonzero(self.predecessors(x)).tolist(),
                                 visit_order, budget)
        return result


def check_lifting_condition(order: OrderOracle,
                            arg_orders: Dict[FunctionSymbol, OrderOracle],
                            universe: Sequence[Term],
                            budget: int = DEFAULT_BUDGET) -> ConditionReport:
    """
    Condition 3 on the fragment: tuples over the universe whose components are
    accessible under `order` must be accessible under <_f

    A <_f cycle is a genuine violation (Fail); budget exhaustion only makes
    the verdict Inconclusive. Predecessors are drawn from the universe and
    its tuples, so escapes cannot occur.

    Args:
        order: Base order on terms
        arg_orders: Per-symbol tuple orders, iterated in insertion order
        universe: Finite term universe
        budget: Node visits shared by the base and per-symbol computations
    """
    _require_arg_orders(arg_orders, universe)
    terms = list(universe)
    n = len(terms)
    matrices: Dict[int, Tuple[np.ndarray, np.ndarray]] = {id(order): order_matrices(order, terms)}

    def matrices_of(base: OrderOracle) -> Tuple[np.ndarray, np.ndarray]:
        if id(base) not in matrices:
            matrices[id(base)] = order_matrices(base, terms)
        return matrices[id(base)]

    lt, _ = matrices[id(order)]
    base = wfp_compute(lambda x: np.flatnonzero(lt[:, x]).tolist(), range(n), budget)
    used = base.budget_used
    pairs = n * n
    accessible = np.zeros(n, dtype=bool)
    accessible[sorted(base.accessible())] = True
    unknown_counts: Dict[str, int] = {}

    for symbol, f_order in arg_orders.items():
        grid = TupleGrid(f_order, terms, symbol.arity, matrices_of)
        subject = np.ones((1,) * symbol.arity, dtype=bool)
        for p in range(symbol.arity):
            subject = subject & grid.axis(accessible, p)
        subject = np.broadcast_to(subject, grid.shape).ravel()
        subjects = np.flatnonzero(subject)
        visit = np.concatenate([subjects, np.flatnonzero(~subject)]).tolist()

        result = grid.classify(visit, max(budget - used, 0))
        used += result.budget_used
        pairs += result.budget_used * grid.size
        for x in subjects.tolist():
            c = result.classification[x]
            if isinstance(c, NonAccessible):
                return ConditionReport(3, Status.FAIL, pairs, n, budget_used=used,
                                       witness={'symbol': symbol, 'tuple': grid.tuples[x],
                                                'cycle': [grid.tuples[y] for y in c.cycle]},
                                       note=f"<_{symbol.name} has a descending cycle "
                                            f"in the examined fragment",
                                       order_name=order.name)
            if isinstance(c, Unknown):
                unknown_counts[c.reason] = unknown_counts.get(c.reason, 0) + 1

    for reason, count in base.unknown_reasons().items():
        unknown_counts[reason] = unknown_counts.get(reason, 0) + count
    if unknown_counts:
        detail = ', '.join(f"{count} {reason}" for reason, count in sorted(unknown_counts.items()))
        return ConditionReport(3, Status.INCONCLUSIVE, pairs, n, budget_used=used,
                               note=f"unknown classifications: {detail}; {LIFTING_SCOPE}; "
                                    f"{FRAGMENT_CAVEAT}",
                               order_name=order.name)
    return ConditionReport(3, Status.PASS, pairs, n, budget_used=used,
                           note=f"{LIFTING_SCOPE}; {FRAGMENT_CAVEAT}", order_name=order.name)


def check_order_properties(order: OrderOracle, universe: Sequence,
                           budget: int = DEFAULT_BUDGET,
                           seed: int = DEFAULT_SEED) -> ConditionReport:
    """
    Irreflexivity on every element and transitivity on every triple, or on
    `budget` uniformly sampled triples when the cube exceeds the budget
    """
    items = list(universe)
    n = len(items)
    pairs = 0
    for x in items:
        pairs += 1
        if order.lt(x, x):
            return ConditionReport(0, Status.FAIL, pairs, n,
                                   witness={'property': 'irreflexivity', 'x': x},
                                   order_name=order.name)

    cache: Dict[Tuple[int, int], bool] = {}

    def lt(i: int, j: int) -> bool:
        nonlocal pairs
        key = (i, j)
        if key not in cache:
            pairs += 1
            cache[key] = order.lt(items[i], items[j])
        return cache[key]

    def failure(i, j, k) -> ConditionReport:
        return ConditionReport(0, Status.FAIL, pairs, n, budget_used=triples,
                               witness={'property': 'transitivity', 'x': items[i],
                                        'y': items[j], 'z': items[k]},
                               seed=used_seed, order_name=order.name)

    triples = 0
    if n ** 3 <= budget:
        used_seed = None
        for i in range(n):
            for j in range(n):
                if not lt(i, j):
                    continue
                for k in range(n):
                    triples += 1
                    if lt(j, k) and not lt(i, k):
                        return failure(i, j, k)
    else:
        used_seed = seed
        rng = np.random.default_rng(seed)
        for i, j, k in rng.integers(0, n, size=(budget, 3)):
            triples += 1
            i, j, k = int(i), int(j), int(k)
            if lt(i, j) and lt(j, k) and not lt(i, k):
                return failure(i, j, k)

    note = FRAGMENT_CAVEAT if used_seed is None else \
        f"transitivity sampled on {triples} triples (seed {used_seed}); {FRAGMENT_CAVEAT}"
    return ConditionReport(0, Status.PASS, pairs, n, budget_used=triples,
                           note=note, seed=used_seed, order_name=order.name)


def order_violations(order: OrderOracle, universe: Sequence,
                     max_reports: int = 10) -> List[Dict[str, Any]]:
    """
    Pairs breaking trichotomy: exactly one of x < y, x == y (order.eq),
    y < x must hold for every pair

    Returns:
        Up to max_reports dicts with keys x, y, lt, eq, gt
    """
    items = list(universe)
    found: List[Dict[str, Any]] = []
    for i, x in enumerate(items):
        for y in items[i:]:
            lt, eq, gt = order.lt(x, y), order.eq(x, y), order.lt(y, x)
            if lt + eq + gt != 1:
                found.append({'x': x, 'y': y, 'lt': lt, 'eq': eq, 'gt': gt})
                if len(found) >= max_reports:
                    return found
    return found


# ===== DESCENDING CHAINS =====

def search_descending_chain(order: OrderOracle, start: Term,
                            neighbor_gen: Optional[Callable[[Term], Iterable[Term]]] = None,
                            max_len: int = CHAIN_MAX_LEN,
                            universe: Optional[Sequence[Term]] = None) -> List[Term]:
    """
    Longest strictly descending chain from start, capped at max_len steps

    Args:
        order: Order the chain descends in
        start: First element of the chain
        neighbor_gen: Candidate next elements (default: universe terms below)
        max_len: Maximum number of descents
        universe: Needed when neighbor_gen is not given

    Returns:
        The chain as a list starting with `start`; its length in steps is
        len(chain) - 1, and [start] means nothing lies below
    """
    if neighbor_gen is None:
        if universe is None:
            raise ValueError("pass either neighbor_gen or universe")
        pool = list(universe)
        neighbor_gen = lambda t: [u for u in pool if order.lt(u, t)]

    neighbours: Dict[Term, List[Term]] = {}
    memo: Dict[Tuple[Term, int], List[Term]] = {}

    def below(x: Term) -> List[Term]:
        if x not in neighbours:
            neighbours[x] = [y for y in neighbor_gen(x) if order.lt(y, x)]
        return neighbours[x]

    def longest(x: Term, depth: int) -> List[Term]:
        key = (x, depth)
        if key in memo:
            return memo[key]
        best = [x]
        if depth > 0:
            for y in below(x):
                candidate = [x] + longest(y, depth - 1)
                if len(candidate) > len(best):
                    best = candidate
                    if len(best) == depth + 1:
                        break
        memo[key] = best
        return best

    return longest(start, max_len)


# ===== CHECKER SUITE =====

class ConditionChecker:
    """
    Runs the proper-order check and the three conditions on one universe
    """

    def __init__(self, order: OrderOracle,
                 arg_orders: Dict[FunctionSymbol, OrderOracle],
                 universe: Sequence[Term],
                 budget: int = DEFAULT_BUDGET,
                 seed: int = DEFAULT_SEED,
                 verbose: bool = False):
        """
        Initialize checker

        Args:
            order: Term order under test
            arg_orders: Per-symbol argument orders (conditions 2 and 3)
            universe: Finite universe of terms
            budget: Visit / sampling budget
            seed: Seed for transitivity sampling
            verbose: Print progress lines
        """
        self.order = order
        self.arg_orders = arg_orders
        self.universe = list(universe)
        self.budget = budget
        self.seed = seed
        self.verbose = verbose

    def _log(self, message: str) -> None:
        if self.verbose:
            print(message)

    def run(self, conditions: Iterable[int] = (0, 1, 2, 3)) -> List[ConditionReport]:
        """
        Run the requested checks in ascending condition order

        Returns:
            One ConditionReport per requested condition
        """
        requested = sorted(set(conditions))
        unknown = [c for c in requested if c not in CONDITION_TITLES]
        if unknown:
            raise ValueError(f"unknown condition {unknown[0]}")

        reports = []
        for condition in requested:
            self._log(f"📊 Checking condition {condition} ({CONDITION_TITLES[condition]}) "
                      f"on {len(self.universe):,} terms...")
            if condition == 0:
                report = check_order_properties(self.order, self.universe, self.budget, self.seed)
            elif condition == 1:
                report = check_subterm_condition(self.order, self.universe)
            elif condition == 2:
                report = check_decomposition_condition(self.order, self.arg_orders, self.universe)
            else:
                report = check_lifting_condition(self.order, self.arg_orders, self.universe,
                                                 self.budget)
            self._log(f"✅ Condition {condition}: {report.status.value} "
                      f"({report.pairs_checked:,} pairs checked)")
            reports.append(report)
        return reports

    def run_all(self) -> List[ConditionReport]:
        """Proper-order check followed by conditions 1, 2 and 3"""
        return self.run((0, 1, 2, 3))

    def summary(self, reports: Iterable[ConditionReport]) -> pd.DataFrame:
        frame = reports_to_frame(reports)
        if self.verbose:
            passed = int((frame["status"] == Status.PASS.value).sum()) if len(frame) else 0
            print(f"📊 {passed}/{len(frame)} checks passed for {self.order.name}")
        return frame


def overall_exit_code(reports: Iterable[ConditionReport]) -> int:
    """0 all pass, 1 any fail, 3 inconclusive without failures"""
    statuses = {r.status for r in reports}
    if Status.FAIL in statuses:
        return EXIT_FAIL
    if Status.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS
