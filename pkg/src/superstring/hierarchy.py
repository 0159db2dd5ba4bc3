"""One-step, two-step and multi-level superstring construction.

Level 1 builds the de Bruijn graph on the (r-1)-spectrum, completes it into
an eulerian path and cuts the spelled path into contigs at every added edge.
Each further level ``j`` repeats this on the generalized (r-j)-spectrum of the
previous contigs. The last level spells its whole path, added edges included.
One level gives the tau superstring, two levels give gamma.
"""

from __future__ import annotations

from dataclasses import dataclass

from superstring.core import Instance, SuperstringSolution
from superstring.errors import BadLevelCount, RTooSmall
from superstring.euler import min_euler_completion
from superstring.graphs import (
    build_debruijn,
    build_generalized_spectrum,
    count_junctions,
    expand_path,
    extract_contigs,
)


@dataclass(frozen=True)
class LevelRecord:
    level: int
    k: int
    nodes: int
    edges: int
    added: int
    contigs: int
    # original-original adjacencies, i.e. overlaps of exactly k laid out
    junctions: int
    length: int


@dataclass(frozen=True)
class HierarchyTrace:
    levels: tuple[LevelRecord, ...]

    def junctions(self, level: int) -> int:
        """Junction count at a 1-based level, 0 if the run stopped earlier."""
        if level <= len(self.levels):
            return self.levels[level - 1].junctions
        return 0


def solve_hierarchical(inst: Instance, levels: int) -> SuperstringSolution:
    r = inst.r
    if r < 3:
        raise RTooSmall(f"hierarchical construction needs r >= 3, got r={r}")
    if not 1 <= levels <= r - 1:
        raise BadLevelCount(f"levels must be in [1, {r - 1}] for r={r}, got {levels}")

    records = []
    labels = inst.strings
    text = b""
    for level in range(1, levels + 1):
        k = r - level
        if level == 1:
            g = build_debruijn(inst)
        else:
            g = build_generalized_spectrum(labels, k)
        plan = min_euler_completion(g)
        contigs = extract_contigs(plan, k)
        assert all(len(c) >= r for c in contigs), "contig shorter than r"
        if level == levels:
            text = expand_path(plan, k)
        records.append(LevelRecord(
            level=level, k=k, nodes=len(g.nodes), edges=len(g.edges),
            added=len(plan.added_edges), contigs=len(contigs),
            junctions=count_junctions(plan), length=contigs.total_length,
        ))
        labels = contigs.contigs

    tag = {1: "tau", 2: "gamma"}.get(levels, f"hier({levels})")
    return SuperstringSolution(text, tag, inst.n, r, HierarchyTrace(tuple(records)))


def solve_tau(inst: Instance) -> SuperstringSolution:
    return solve_hierarchical(inst, 1)


def solve_gamma(inst: Instance) -> SuperstringSolution:
    return solve_hierarchical(inst, 2)
