"""
Relation Generator
Seeded random digraphs and the edge-file format used by the wfp command
"""

import re
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from config import *
from errors import ParseError

Edge = Tuple[str, str]

_NODE = re.compile(r'[A-Za-z0-9_]+')


class RelationGenerator:
    """
    Generates random finite relations for the well-founded-part suites
    """

    def __init__(self, seed: int = DEFAULT_SEED):
        """
        Initialize generator

        Args:
            seed: Seed for numpy's default_rng; equal seeds give equal graphs
        """
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def random_graph(self, n_nodes: int,
                     edge_prob: float = RANDOM_GRAPH_EDGE_PROB) -> Tuple[List[str], List[Edge]]:
        """
        Directed graph on n_nodes with each ordered pair (self-loops
        included) present with probability edge_prob

        Returns:
            (nodes, edges) where an edge (p, x) means p is below x
        """
        nodes = [f"n{i}" for i in range(n_nodes)]
        mask = self.rng.random((n_nodes, n_nodes)) < edge_prob
        edges = [(nodes[p], nodes[x]) for p, x in zip(*np.nonzero(mask))]
        return nodes, edges

    def random_graphs(self, count: int = RANDOM_GRAPH_COUNT,
                      max_nodes: int = RANDOM_GRAPH_MAX_NODES,
                      edge_prob: float = RANDOM_GRAPH_EDGE_PROB
                      ) -> List[Tuple[List[str], List[Edge]]]:
        """count graphs with 1..max_nodes nodes drawn uniformly"""
        sizes = self.rng.integers(1, max_nodes + 1, size=count)
        return [self.random_graph(int(n), edge_prob) for n in sizes]

    def chain(self, length: int) -> Tuple[List[str], List[Edge]]:
        nodes = [f"c{i}" for i in range(length)]
        return nodes, list(zip(nodes, nodes[1:]))

    def graphs_frame(self, graphs: Sequence[Tuple[List[str], List[Edge]]]) -> pd.DataFrame:
        """One row per graph: id, node count, edge count, self-loops"""
        return pd.DataFrame([
            {'graph_id': i, 'nodes': len(nodes), 'edges': len(edges),
             'self_loops': sum(1 for p, x in edges if p == x)}
            for i, (nodes, edges) in enumerate(graphs)
        ])

    def save_graphs(self, graphs: Sequence[Tuple[List[str], List[Edge]]],
                    directory: Path = SYNTHETIC_DATA_DIR) -> None:
        directory.mkdir(parents=True, exist_ok=True)
        for i, (nodes, edges) in enumerate(graphs):
            write_edge_file(directory / f"graph_{i:04d}.txt", edges, nodes)
        print(f"💾 Saved {len(graphs):,} edge files to {directory}")


# ===== EDGE FILES =====

def parse_edges(text: str) -> Tuple[List[str], List[Edge]]:
    """
    Parse edge-file text

    Each line is `pred node` (pred is below node), a lone identifier
    declaring an isolated node, blank, or a `#` comment.

    Returns:
        (nodes in first-appearance order, edges)

    Raises:
        ParseError: with the offending line's character offset
    """
    nodes: List[str] = []
    edges: List[Edge] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        content = line.split('#', 1)[0]
        fields = content.split()
        if len(fields) > 2 or not all(_NODE.fullmatch(f) for f in fields):
            raise ParseError(f"bad edge line {line.strip()!r}", offset)
        if len(fields) == 2:
            edges.append((fields[0], fields[1]))
        nodes.extend(fields)
        offset += len(line)
    return list(dict.fromkeys(nodes)), edges


def read_edge_file(path: Union[str, Path],
                   extra_nodes: Iterable[str] = ()) -> Tuple[List[str], List[Edge]]:
    nodes, edges = parse_edges(Path(path).read_text())
    return list(dict.fromkeys(list(nodes) + list(extra_nodes))), edges


def write_edge_file(path: Union[str, Path], edges: Iterable[Edge],
                    nodes: Optional[Iterable[str]] = None) -> None:
    edges = list(edges)
    lines = [f"{p} {x}" for p, x in edges]
    if nodes is not None:
        touched = {n for e in edges for n in e}
        lines += [n for n in nodes if n not in touched]
    Path(path).write_text('\n'.join(lines) + ('\n' if lines else ''))
