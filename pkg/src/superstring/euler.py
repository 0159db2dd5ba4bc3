"""Exact 2-SCS via minimum eulerian completion of a directed multigraph.

The completion adds ``sum(max(d_i, 1)) - 1`` edges, where ``d_i`` is the
total out-degree surplus of weakly connected component ``i``. All choices
are made in lexicographic order so the output is reproducible:

* components are visited by their smallest node label;
* a component starts at its smallest surplus node (smallest node if
  balanced), and its sorted deficit nodes are wired to its sorted surplus
  nodes ``D[j] -> S[j+1]``; the last deficit node is the component's end;
* each component's end is wired to the next component's start;
* Hierholzer's walk always takes the smallest unused outgoing edge, ordered
  by ``(label, dst)``. Added edges carry an empty label.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from superstring.errors import EmptyGraph, SuperstringError
from superstring.graphs import DiMultiGraph, Edge, Origin, expand_path


@dataclass(frozen=True)
class EulerPlan:
    edge_sequence: tuple[Edge, ...]
    added_edges: tuple[tuple[bytes, bytes], ...]
    start_node: bytes

    @property
    def end_node(self) -> bytes:
        return self.edge_sequence[-1].dst


@dataclass(frozen=True)
class Pair2SCS:
    """Length-2 strings over an abstract alphabet, each with a multiplicity."""

    pairs: tuple[bytes, ...]
    multiplicity: tuple[int, ...]

    def __post_init__(self):
        if len(self.pairs) != len(self.multiplicity):
            raise ValueError("pairs and multiplicity differ in length")
        if any(len(p) != 2 for p in self.pairs):
            raise ValueError("every pair must have exactly two symbols")
        if any(m < 1 for m in self.multiplicity):
            raise ValueError("multiplicities must be positive")

    @classmethod
    def of(cls, pairs: Sequence[bytes | str], multiplicity: Sequence[int] | None = None) -> Pair2SCS:
        pairs = tuple(p.encode() if isinstance(p, str) else bytes(p) for p in pairs)
        if multiplicity is None:
            multiplicity = [1] * len(pairs)
        return cls(pairs, tuple(multiplicity))

    def graph(self) -> DiMultiGraph:
        labels = [p for p, m in zip(self.pairs, self.multiplicity) for _ in range(m)]
        return DiMultiGraph.from_labels(labels, 1)


def _components(g: DiMultiGraph) -> list[list[bytes]]:
    """Weakly connected components over nodes that touch an edge, each sorted,
    ordered by their smallest label."""
    parent: dict[bytes, bytes] = {}

    def find(x: bytes) -> bytes:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for e in g.edges:
        parent.setdefault(e.src, e.src)
        parent.setdefault(e.dst, e.dst)
        a, b = find(e.src), find(e.dst)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[bytes, list[bytes]] = defaultdict(list)
    for v in parent:
        groups[find(v)].append(v)
    return sorted((sorted(c) for c in groups.values()), key=lambda c: c[0])


def _imbalance(g: DiMultiGraph) -> dict[bytes, int]:
    bal: dict[bytes, int] = defaultdict(int)
    for e in g.edges:
        bal[e.src] += 1
        bal[e.dst] -= 1
    return bal


def added_edge_lower_bound(g: DiMultiGraph) -> int:
    """Minimum number of edges whose addition makes an eulerian path exist."""
    if not g.edges:
        raise EmptyGraph("graph has no edges")
    bal = _imbalance(g)
    comps = _components(g)
    return sum(max(sum(max(0, bal[v]) for v in c), 1) for c in comps) - 1


def _completion(g: DiMultiGraph) -> tuple[bytes, list[tuple[bytes, bytes]]]:
    bal = _imbalance(g)
    starts, ends, added = [], [], []
    for comp in _components(g):
        surplus = [v for v in comp for _ in range(max(0, bal[v]))]
        deficit = [v for v in comp for _ in range(max(0, -bal[v]))]
        if surplus:
            added.extend(zip(deficit[:-1], surplus[1:]))
            starts.append(surplus[0])
            ends.append(deficit[-1])
        else:
            starts.append(comp[0])
            ends.append(comp[0])
    added.extend(zip(ends[:-1], starts[1:]))
    return starts[0], added


def _hierholzer(edges: Sequence[Edge], start: bytes) -> list[Edge]:
    out: dict[bytes, list[Edge]] = defaultdict(list)
    for e in edges:
        out[e.src].append(e)
    for adj in out.values():
        # popped from the end, so the smallest edge comes last
        adj.sort(key=lambda e: (e.label, e.dst, e.index), reverse=True)
    path: list[Edge] = []
    stack: list[tuple[bytes, Edge | None]] = [(start, None)]
    while stack:
        v, via = stack[-1]
        if out[v]:
            e = out[v].pop()
            stack.append((e.dst, e))
        else:
            stack.pop()
            if via is not None:
                path.append(via)
    path.reverse()
    return path


def min_euler_completion(g: DiMultiGraph) -> EulerPlan:
    if not g.edges:
        raise EmptyGraph("graph has no edges")
    start, added = _completion(g)
    m = len(g.edges)
    completed = list(g.edges) + [
        Edge(u, v, b"", Origin.ADDED, m + i) for i, (u, v) in enumerate(added)
    ]
    bal = _imbalance(DiMultiGraph(g.k, g.nodes, tuple(completed)))
    if sum(b for b in bal.values() if b > 0) > 1:
        raise SuperstringError("completion left more than one surplus node")
    path = _hierholzer(completed, start)
    if len(path) != len(completed):
        raise SuperstringError("completed graph is not eulerian")
    return EulerPlan(tuple(path), tuple(added), start)


def solve_2scs(p: Pair2SCS) -> bytes:
    """Shortest string containing every pair at least its multiplicity times."""
    return expand_path(min_euler_completion(p.graph()), 1)
