"""
Order Extensions Module
Lexicographic and multiset extensions of a base order, and a bounded
well-founded-part engine for finite fragments of a relation
"""

import operator
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import (Any, Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional,
                    Sequence, Set, Tuple, Union)

import numpy as np
import pandas as pd

from errors import LengthMismatch

BUDGET_EXHAUSTED = 'budget-exhausted'
OUTSIDE_UNIVERSE = 'predecessor-outside-universe'


@dataclass(frozen=True)
class OrderOracle:
    """
    A strict-less-than decision procedure over some carrier

    Nothing about lt is assumed beyond determinism; irreflexivity and
    transitivity are checked by the checkers, never relied upon here.
    """
    lt: Callable[[Any, Any], bool]
    eq: Callable[[Any, Any], bool] = operator.eq
    name: str = 'order'

    def __call__(self, x, y) -> bool:
        return self.lt(x, y)

    def le(self, x, y) -> bool:
        return self.lt(x, y) or self.eq(x, y)


# ===== EXTENSIONS =====

def lex_lt(base: OrderOracle, a: Sequence, b: Sequence) -> bool:
    """
    Lexicographic extension on equal-length tuples: at the first position
    where a and b differ, base.lt must hold

    Raises:
        LengthMismatch: if the tuples have different lengths
    """
    if len(a) != len(b):
        raise LengthMismatch(f"tuples of length {len(a)} and {len(b)}")
    for x, y in zip(a, b):
        if base.eq(x, y):
            continue
        return base.lt(x, y)
    return False


def pair_multiset_lt(base: OrderOracle, t: Sequence, s: Sequence) -> bool:
    """
    Closed-form multiset extension on pairs: either some t_i < s_j with
    t_(1-i) <= s_(1-j), or both components of t lie below the same s_j
    """
    for i in (0, 1):
        for j in (0, 1):
            if base.lt(t[i], s[j]) and base.le(t[1 - i], s[1 - j]):
                return True
    return any(base.lt(t[0], s[j]) and base.lt(t[1], s[j]) for j in (0, 1))


def _cancel(a: Sequence, b: Sequence, eq: Callable[[Any, Any], bool]) -> Tuple[List, List]:
    rest_a = list(a)
    rest_b = list(b)
    i = 0
    while i < len(rest_a):
        for j, y in enumerate(rest_b):
            if eq(rest_a[i], y):
                del rest_a[i]
                del rest_b[j]
                break
        else:
            i += 1
    return rest_a, rest_b


def dm_multiset_lt(base: OrderOracle, a: Iterable, b: Iterable) -> bool:
    """
    Dershowitz-Manna multiset extension

    After cancelling equal elements pairwise, b's remainder must be non-empty
    and every element left in a must lie below some element left in b.
    """
    rest_a, rest_b = _cancel(list(a), list(b), base.eq)
    if not rest_b:
        return False
    return all(any(base.lt(x, y) for y in rest_b) for x in rest_a)


def revlex_lt(base: OrderOracle, a: Sequence, b: Sequence) -> bool:
    """Lexicographic comparison read right to left"""
    return lex_lt(base, tuple(reversed(a)), tuple(reversed(b)))


TUPLE_EXTENSIONS: Dict[str, Callable[[OrderOracle, Sequence, Sequence], bool]] = {
    'lex': lex_lt,
    'revlex': revlex_lt,
    'mul': pair_multiset_lt,
    'dm': dm_multiset_lt,
}


@dataclass(frozen=True)
class TupleOrder(OrderOracle):
    """
    Order on argument tuples built from a base order by a named extension

    `planted` holds extra (b, a) edges meaning b < a. Keeping kind and base
    lets callers evaluate the order over index matrices of the base.
    """
    kind: str = 'lex'
    base: Optional[OrderOracle] = None
    planted: FrozenSet[Tuple[tuple, tuple]] = frozenset()


def tuple_order(base: OrderOracle, kind: str,
                planted: Iterable[Tuple[Sequence, Sequence]] = (),
                name: Optional[str] = None) -> TupleOrder:
    """
    Raises:
        KeyError: for a kind outside TUPLE_EXTENSIONS
    """
    extend = TUPLE_EXTENSIONS[kind]
    edges = frozenset((tuple(b), tuple(a)) for b, a in planted)

    def lt(a, b) -> bool:
        if (tuple(a), tuple(b)) in edges:
            return True
        if kind == 'mul' and len(a) != 2:
            return False
        return extend(base, a, b)

    label = name or f"{kind}({base.name})" + ('+planted' if edges else '')
    return TupleOrder(lt, name=label, kind=kind, base=base, planted=edges)


def lex_order(base: OrderOracle, name: Optional[str] = None) -> TupleOrder:
    return tuple_order(base, 'lex', name=name)


def pair_multiset_order(base: OrderOracle, name: Optional[str] = None) -> TupleOrder:
    return tuple_order(base, 'mul', name=name)


# ===== WELL-FOUNDED PART =====

@dataclass(frozen=True)
class Accessible:
    rank: int
    status: str = field(default='ACCESSIBLE', init=False)


@dataclass(frozen=True)
class NonAccessible:
    """Below a cycle: `cycle` is a descending cycle, `via` the first step toward it"""
    cycle: Tuple
    via: Optional[Hashable] = None
    status: str = field(default='NON_ACCESSIBLE', init=False)


@dataclass(frozen=True)
class Unknown:
    reason: str
    via: Optional[Hashable] = None
    status: str = field(default='UNKNOWN', init=False)


Classification = Union[Accessible, NonAccessible, Unknown]


@dataclass
class WfpResult:
    """
    Three-valued accessibility classification of a finite fragment

    Attributes:
        classification: node -> Accessible / NonAccessible / Unknown
        budget_used: number of nodes whose predecessors were computed
    """
    classification: Dict[Hashable, Classification]
    budget_used: int = 0

    def _where(self, kind) -> List[Hashable]:
        return [n for n, c in self.classification.items() if isinstance(c, kind)]

    def accessible(self) -> Set[Hashable]:
        return set(self._where(Accessible))

    def non_accessible(self) -> List[Hashable]:
        return self._where(NonAccessible)

    def unknown(self) -> List[Hashable]:
        return self._where(Unknown)

    def rank(self, node: Hashable) -> Optional[int]:
        c = self.classification.get(node)
        return c.rank if isinstance(c, Accessible) else None

    def height(self) -> int:
        """Largest Accessible rank (0 when nothing is accessible)"""
        return max((c.rank for c in self.classification.values()
                    if isinstance(c, Accessible)), default=0)

    def counts(self) -> Dict[str, int]:
        counts = {'ACCESSIBLE': 0, 'NON_ACCESSIBLE': 0, 'UNKNOWN': 0}
        for c in self.classification.values():
            counts[c.status] += 1
        return counts

    def unknown_reasons(self) -> Dict[str, int]:
        reasons: Dict[str, int] = defaultdict(int)
        for c in self.classification.values():
            if isinstance(c, Unknown):
                reasons[c.reason] += 1
        return dict(reasons)

    def to_frame(self, label: Callable[[Any], str] = str) -> pd.DataFrame:
        """One row per node: status, rank, witness and reason columns"""
        rows = []
        for node, c in self.classification.items():
            row = {'node': label(node), 'status': c.status, 'rank': None,
                   'witness': None, 'reason': None}
            if isinstance(c, Accessible):
                row['rank'] = c.rank
            elif isinstance(c, NonAccessible):
                row['witness'] = ' > '.join(label(x) for x in c.cycle)
                if c.via is not None:
                    row['reason'] = f"via {label(c.via)}"
            else:
                row['reason'] = c.reason
                if c.via is not None:
                    row['witness'] = label(c.via)
            rows.append(row)
        return pd.DataFrame(rows, columns=['node', 'status', 'rank', 'witness', 'reason'])


def wfp_compute(predecessors: Callable[[Hashable], Iterable[Hashable]],
                universe: Iterable[Hashable],
                budget: int) -> WfpResult:
    """
    Bounded well-founded-part computation

    Args:
        predecessors: node -> nodes below it (deterministic)
        universe: Finite node collection; its order decides which nodes the
            budget reaches
        budget: Maximum number of nodes whose predecessors are computed

    Returns:
        WfpResult where Accessible is the least fixpoint of "every predecessor
        inside the universe and accessible", NonAccessible marks nodes that
        reach a cycle, and Unknown marks escapes and budget exhaustion
    """
    nodes = list(dict.fromkeys(universe))
    members = set(nodes)
    preds: Dict[Hashable, List[Hashable]] = {}
    result: Dict[Hashable, Classification] = {}

    for x in nodes:
        if len(preds) >= budget:
            break
        preds[x] = list(dict.fromkeys(predecessors(x)))

    # least fixpoint by counting down resolved predecessors
    pending = {x: len(ps) for x, ps in preds.items()}
    succs: Dict[Hashable, List[Hashable]] = defaultdict(list)
    for x, ps in preds.items():
        for p in ps:
            if p in preds:
                succs[p].append(x)

    ranks: Dict[Hashable, int] = {}
    queue = deque(x for x in preds if pending[x] == 0)
    while queue:
        x = queue.popleft()
        ranks[x] = 1 + max((ranks[p] for p in preds[x]), default=-1)
        for y in succs[x]:
            pending[y] -= 1
            if pending[y] == 0:
                queue.append(y)

    # strip nodes with no infinite descent; what survives sits on or above a cycle
    rest = [x for x in preds if x not in ranks]
    rest_set = set(rest)
    pending = {x: sum(1 for p in preds[x] if p in rest_set) for x in rest}
    unknown: Dict[Hashable, Unknown] = {}
    queue = deque(x for x in rest if pending[x] == 0)
    while queue:
        x = queue.popleft()
        unknown[x] = _blocking_reason(x, preds[x], members, preds, unknown)
        for y in succs[x]:
            if y in pending:
                pending[y] -= 1
                if pending[y] == 0:
                    queue.append(y)

    cyclic = rest_set - set(unknown)
    for x in nodes:
        if x in ranks:
            result[x] = Accessible(ranks[x])
        elif x in unknown:
            result[x] = unknown[x]
        elif x in cyclic:
            result[x] = _cycle_witness(x, preds, cyclic)
        else:
            result[x] = Unknown(BUDGET_EXHAUSTED)
    return WfpResult(result, budget_used=len(preds))


def wfp_ranked(predecessor_mask: Callable[[int], np.ndarray],
               visit_order: Sequence[int],
               size: int,
               budget: int) -> Optional[WfpResult]:
    """
    wfp_compute for a dense relation on 0..size-1 given as boolean
    predecessor masks, without materializing predecessor lists

    Visited nodes are resolved in order of predecessor count, which is a
    linear extension whenever the relation is transitive and acyclic on
    them. Returns None as soon as a predecessor turns up unresolved; the
    caller then falls back to wfp_compute, which also finds cycles.
    """
    visit = [int(x) for x in visit_order]
    visited = np.asarray(visit[:max(budget, 0)], dtype=np.int64)
    computed = np.zeros(size, dtype=bool)
    computed[visited] = True
    counts = np.array([int(predecessor_mask(x).sum()) for x in visited], dtype=np.int64)

    ranks = np.full(size, -1, dtype=np.int64)
    blocked = np.zeros(size, dtype=bool)
    done = np.zeros(size, dtype=bool)
    resolved: Dict[int, Classification] = {}
    for pos in np.argsort(counts, kind='stable'):
        x = int(visited[pos])
        mask = predecessor_mask(x)
        if (mask & computed & ~done).any():
            return None
        stuck = mask & (~computed | blocked)
        if stuck.any():
            blocked[x] = True
            resolved[x] = Unknown(BUDGET_EXHAUSTED, via=int(np.argmax(stuck)))
        else:
            ranks[x] = 1 + int(ranks[mask].max(initial=-1))
            resolved[x] = Accessible(int(ranks[x]))
        done[x] = True

    classification = {x: resolved.get(x, Unknown(BUDGET_EXHAUSTED)) for x in visit}
    return WfpResult(classification, budget_used=len(visited))


def _blocking_reason(x, ps, members, preds, unknown) -> Unknown:
    for p in ps:
        if p not in members:
            return Unknown(OUTSIDE_UNIVERSE, via=p)
    for p in ps:
        if p not in preds:
            return Unknown(BUDGET_EXHAUSTED, via=p)
        if p in unknown:
            return Unknown(unknown[p].reason, via=p)
    # unreachable for a non-accessible node; kept total
    return Unknown(BUDGET_EXHAUSTED)


def _cycle_witness(x, preds, cyclic) -> NonAccessible:
    path = [x]
    seen = {x: 0}
    current = x
    while True:
        current = next(p for p in preds[current] if p in cyclic)
        if current in seen:
            cycle = tuple(path[seen[current]:])
            break
        seen[current] = len(path)
        path.append(current)
    via = None if x in cycle else path[1]
    return NonAccessible(cycle, via=via)


def accessible_brute(edges: Iterable[Tuple[Hashable, Hashable]],
                     nodes: Iterable[Hashable] = ()) -> Set[Hashable]:
    """
    Exact well-founded part of a finite relation given as (pred, node) edges,
    by adding "all predecessors already added" nodes until nothing changes
    """
    preds: Dict[Hashable, Set[Hashable]] = defaultdict(set)
    universe: List[Hashable] = list(nodes)
    for p, x in edges:
        preds[x].add(p)
        universe.extend((p, x))
    universe = list(dict.fromkeys(universe))

    acc: Set[Hashable] = set()
    changed = True
    while changed:
        changed = False
        for x in universe:
            if x not in acc and preds[x] <= acc:
                acc.add(x)
                changed = True
    return acc


def predecessors_from_edges(edges: Iterable[Tuple[Hashable, Hashable]]
                            ) -> Callable[[Hashable], List[Hashable]]:
    table: Dict[Hashable, List[Hashable]] = defaultdict(list)
    for p, x in edges:
        if p not in table[x]:
            table[x].append(p)
    return lambda x: list(table.get(x, ()))


def universe_height(result: WfpResult) -> int:
    """Longest descent among Accessible nodes, i.e. the largest rank"""
    return result.height()
