"""Exact optimum, greedy baseline and overlap-usage accounting."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from superstring.core import Instance, SuperstringSolution, max_overlap, merge_in_order
from superstring.errors import InstanceTooLarge, MissingTrace
from superstring.graphs import build_overlap_graph

DEFAULT_OPT_CAP = 20


@dataclass(frozen=True)
class HamiltonianResult:
    order: tuple[int, ...]
    weight: int
    opt_length: int
    superstring: bytes

    def edge_weights(self, inst: Instance) -> list[int]:
        s = inst.strings
        return [max_overlap(s[a], s[b]) for a, b in zip(self.order, self.order[1:])]


def _weight_matrix(inst: Instance) -> np.ndarray:
    return np.array(build_overlap_graph(inst).weights, dtype=np.int64).reshape(inst.n, inst.n)


def heldkarp_opt(inst: Instance, cap: int = DEFAULT_OPT_CAP) -> HamiltonianResult:
    """Maximum-weight Hamiltonian path of the overlap graph by subset DP.

    ``best[mask, j]`` is the heaviest path visiting exactly ``mask`` and ending
    at ``j`` (-1 if impossible). Masks are processed one popcount layer at a
    time, vectorised over the layer.
    """
    n = inst.n
    if n > cap:
        raise InstanceTooLarge(f"n={n} exceeds the Held-Karp cap {cap}")
    w = _weight_matrix(inst)
    dtype = np.int16 if (inst.r - 1) * n < np.iinfo(np.int16).max else np.int32
    full = (1 << n) - 1
    best = np.full((1 << n, n), -1, dtype=dtype)
    for i in range(n):
        best[1 << i, i] = 0

    masks = np.arange(1 << n, dtype=np.int64)
    popcount = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        popcount += ((masks >> i) & 1).astype(np.int8)
    for size in range(1, n):
        layer = masks[popcount == size]
        vals = best[layer].astype(np.int64)
        reach = vals >= 0
        for k in range(n):
            free = (layer >> k) & 1 == 0
            cand = np.where(reach[free], vals[free] + w[:, k], -1).max(axis=1)
            best[layer[free] | (1 << k), k] = cand

    end = int(np.argmax(best[full]))
    weight = int(best[full, end])
    order = [end]
    mask = full
    while mask != 1 << order[-1]:
        cur = order[-1]
        prev_mask = mask ^ (1 << cur)
        target = best[mask, cur]
        for j in range(n):
            if prev_mask >> j & 1 and best[prev_mask, j] >= 0 \
                    and best[prev_mask, j] + w[j, cur] == target:
                order.append(j)
                break
        mask = prev_mask
    order.reverse()
    text = merge_in_order([inst.strings[i] for i in order])
    return HamiltonianResult(tuple(order), weight, inst.r * n - weight, text)


def brute_force_opt(inst: Instance) -> HamiltonianResult:
    """Exhaustive search over all orders; reference for small ``n`` only."""
    w = build_overlap_graph(inst).weights
    best_order, best_weight = None, -1
    for perm in itertools.permutations(range(inst.n)):
        total = sum(w[a][b] for a, b in zip(perm, perm[1:]))
        if total > best_weight:
            best_order, best_weight = perm, total
    text = merge_in_order([inst.strings[i] for i in best_order])
    return HamiltonianResult(best_order, best_weight, inst.r * inst.n - best_weight, text)


def opt_solution(inst: Instance, cap: int = DEFAULT_OPT_CAP) -> SuperstringSolution:
    h = heldkarp_opt(inst, cap)
    return SuperstringSolution(h.superstring, "opt", inst.n, inst.r)


def greedy_scs(inst: Instance) -> SuperstringSolution:
    """Repeatedly merge the pair with the largest overlap.

    Ties go to the pair whose merged string is lexicographically smallest.
    Remaining strings that became substrings of a merge are dropped.
    """
    pool = list(inst.strings)
    while len(pool) > 1:
        best = None
        for i, u in enumerate(pool):
            for j, v in enumerate(pool):
                if i == j:
                    continue
                k = max_overlap(u, v)
                key = (-k, u + v[k:])
                if best is None or key < best[0]:
                    best = (key, i, j)
        (_, merged), i, j = best
        pool = [s for t, s in enumerate(pool) if t not in (i, j) and s not in merged]
        pool.append(merged)
    return SuperstringSolution(pool[0], "greedy", inst.n, inst.r)


@dataclass(frozen=True)
class OverlapUsageReport:
    t1: int
    t2: int
    vbar1: int
    vbar2: int
    v: int

    @property
    def t(self) -> int:
        return self.t1 + self.t2

    @property
    def vbar(self) -> int:
        return self.vbar1 + self.vbar2

    @property
    def holds(self) -> bool:
        return self.t >= self.vbar


def overlap_usage(sol: SuperstringSolution, inst: Instance,
                  h: HamiltonianResult) -> OverlapUsageReport:
    """Compare heavy junctions laid out in ``sol`` with heavy edges of ``h``.

    ``t1``/``t2`` count junctions of overlap r-1 and r-2 recorded by the first
    two levels of the solution's trace; the ``vbar`` counters count edges of
    weight r-1 and r-2 in the Hamiltonian path, ``v`` the lighter ones.
    """
    if sol.trace is None:
        raise MissingTrace(f"solution {sol.algorithm!r} carries no hierarchy trace")
    r = inst.r
    weights = h.edge_weights(inst)
    return OverlapUsageReport(
        t1=sol.trace.junctions(1),
        t2=sol.trace.junctions(2),
        vbar1=sum(1 for x in weights if x == r - 1),
        vbar2=sum(1 for x in weights if x == r - 2),
        v=sum(1 for x in weights if x <= r - 3),
    )


def hamiltonian_weight(inst: Instance, order: Sequence[int]) -> int:
    s = inst.strings
    return sum(max_overlap(s[a], s[b]) for a, b in zip(order, order[1:]))
