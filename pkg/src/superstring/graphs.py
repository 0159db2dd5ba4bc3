"""Overlap graphs, spectrum graphs, contigs and path expansion."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from superstring.core import Instance, max_overlap
from superstring.errors import ContigTooShort, RTooSmall

if TYPE_CHECKING:
    from superstring.euler import EulerPlan


class Origin(enum.Enum):
    ORIGINAL = "original"
    ADDED = "added"


@dataclass(frozen=True)
class Edge:
    src: bytes
    dst: bytes
    label: bytes
    origin: Origin = Origin.ORIGINAL
    # position in the owning graph's edge list; keeps parallel edges distinct
    index: int = -1

    @property
    def is_added(self) -> bool:
        return self.origin is Origin.ADDED


@dataclass(frozen=True)
class DiMultiGraph:
    """Directed multigraph whose nodes are k-mers and edges are labelled strings."""

    k: int
    nodes: tuple[bytes, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def from_labels(cls, labels: Iterable[bytes], k: int) -> DiMultiGraph:
        """One original edge per label, from its k-prefix to its k-suffix."""
        nodes: dict[bytes, None] = {}
        edges = []
        for i, w in enumerate(labels):
            src, dst = w[:k], w[len(w) - k:]
            nodes.setdefault(src)
            nodes.setdefault(dst)
            edges.append(Edge(src, dst, w, Origin.ORIGINAL, i))
        return cls(k, tuple(nodes), tuple(edges))

    def out_degree(self) -> dict[bytes, int]:
        deg = dict.fromkeys(self.nodes, 0)
        for e in self.edges:
            deg[e.src] += 1
        return deg

    def in_degree(self) -> dict[bytes, int]:
        deg = dict.fromkeys(self.nodes, 0)
        for e in self.edges:
            deg[e.dst] += 1
        return deg

    def to_text(self) -> str:
        """Debug dump, one ``src dst label origin`` line per edge."""
        return "".join(
            f"{_show(e.src)} {_show(e.dst)} {_show(e.label) or '-'} {e.origin.value}\n"
            for e in self.edges
        )


def _show(b: bytes) -> str:
    return b.decode("utf-8", errors="backslashreplace")


@dataclass(frozen=True)
class OverlapGraph:
    nodes: tuple[bytes, ...]
    weights: tuple[tuple[int, ...], ...]

    def weight(self, i: int, j: int) -> int:
        return self.weights[i][j]

    def label(self, i: int, j: int) -> bytes:
        return self.nodes[j][: self.weights[i][j]]


@dataclass(frozen=True)
class ContigSet:
    contigs: tuple[bytes, ...]
    source_k: int

    def __len__(self) -> int:
        return len(self.contigs)

    def __iter__(self):
        return iter(self.contigs)

    @property
    def total_length(self) -> int:
        return sum(map(len, self.contigs))


def build_overlap_graph(inst: Instance) -> OverlapGraph:
    s = inst.strings
    weights = tuple(
        tuple(0 if i == j else max_overlap(s[i], s[j]) for j in range(len(s)))
        for i in range(len(s))
    )
    return OverlapGraph(s, weights)


def build_debruijn(inst: Instance) -> DiMultiGraph:
    """de Bruijn graph on the (r-1)-spectrum: one edge per instance string."""
    if inst.r < 3:
        raise RTooSmall(f"de Bruijn reduction needs r >= 3, got r={inst.r}")
    return DiMultiGraph.from_labels(inst.strings, inst.r - 1)


def build_generalized_spectrum(contigs: ContigSet | Sequence[bytes], k: int) -> DiMultiGraph:
    """Graph on the k-prefixes and k-suffixes of contigs, one edge per contig."""
    for i, c in enumerate(contigs):
        if len(c) < k + 1:
            raise ContigTooShort(f"contig {i} has length {len(c)} < k+1 = {k + 1}")
    return DiMultiGraph.from_labels(contigs, k)


def _runs(plan: EulerPlan) -> list[list[Edge]]:
    runs: list[list[Edge]] = []
    current: list[Edge] = []
    for e in plan.edge_sequence:
        if e.is_added:
            if current:
                runs.append(current)
            current = []
        else:
            current.append(e)
    if current:
        runs.append(current)
    return runs


def _glue(labels: Sequence[bytes], k: int) -> bytes:
    out = bytearray(labels[0])
    for w in labels[1:]:
        out += w[k:]
    return bytes(out)


def expand_path(plan: EulerPlan, k: int) -> bytes:
    """Spell the plan: original edges sharing a node overlap by ``k``, added
    edges contribute nothing and force plain concatenation."""
    return b"".join(_glue([e.label for e in run], k) for run in _runs(plan))


def extract_contigs(plan: EulerPlan, k: int) -> ContigSet:
    return ContigSet(tuple(_glue([e.label for e in run], k) for run in _runs(plan)), k)


def count_junctions(plan: EulerPlan) -> int:
    """Number of original-original adjacencies in the plan."""
    return sum(len(run) - 1 for run in _runs(plan))
