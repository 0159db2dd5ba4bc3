"""Approximation-ratio terms and their max-min envelopes.

Every term is a ratio of two affine functions of ``x`` (the normalised
compression ``w(H)/n``), hence monotone on ``[0, r-1]``. The pointwise minimum
of such terms therefore peaks either at an end of the interval or where two
terms cross, which is what :func:`maximize_envelope` exploits after a coarse
grid scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from superstring.errors import DomainError

GENERAL_BOUND = 2 + 11 / 30

Term = Callable[[float], float]


def _check(r: int, x: float, r_min: int) -> None:
    if r < r_min:
        raise DomainError(f"r must be >= {r_min}, got {r}")
    if not 0 <= x < r:
        raise DomainError(f"x must lie in [0, r) = [0, {r}), got {x}")


def hier_term(r: int, x: float) -> float:
    """Ratio guaranteed by the two-level construction."""
    _check(r, x, 3)
    return (4 + (r - 2) * (r - x - 1)) / (2 * (r - x))


def golovnev_term(r: int, x: float) -> float:
    """Ratio guaranteed by the one-level (de Bruijn only) construction."""
    _check(r, x, 2)
    return ((r * r - 2 * r + 2) - (r - 1) * x) / (r - x)


def atsp_term(r: int, x: float) -> float:
    """Ratio from a Hamiltonian path carrying 2/3 of the optimum weight."""
    _check(r, x, 2)
    return (r - 2 * x / 3) / (r - x)


def level_term(r: int, x: float, levels: int) -> float:
    """Multi-level analogue of :func:`hier_term`, every overlap counted as r-levels.

    Reduces to :func:`hier_term` for two levels.
    """
    if not 2 <= levels <= r - 1:
        raise DomainError(f"levels must be in [2, {r - 1}], got {levels}")
    _check(r, x, 3)
    return (levels * levels + (r - levels) * (r - x - 1)) / (levels * (r - x))


@dataclass(frozen=True)
class EnvelopeMax:
    value: float
    argmax: float
    grid_value: float


def _crossing(f: Term, g: Term, lo: float, hi: float, tol: float = 1e-14) -> float:
    """Bisection on ``f - g`` over a bracketing interval."""
    d_lo = f(lo) - g(lo)
    for _ in range(200):
        mid = (lo + hi) / 2
        d_mid = f(mid) - g(mid)
        if (d_mid > 0) == (d_lo > 0) and d_mid != 0:
            lo, d_lo = mid, d_mid
        else:
            hi = mid
        if hi - lo < tol:
            break
    return (lo + hi) / 2


def maximize_envelope(terms: Sequence[Term], upper: float,
                      step: float = 1e-4) -> EnvelopeMax:
    """Maximise ``min(term(x) for term in terms)`` over ``x`` in ``[0, upper]``."""

    def env(x: float) -> float:
        return min(t(x) for t in terms)

    count = int(math.floor(upper / step + 1e-9))
    xs = [i * step for i in range(count + 1)]
    if xs[-1] < upper:
        xs.append(upper)
    values = [[t(x) for x in xs] for t in terms]
    envelope = [min(col) for col in zip(*values)]
    grid_i = max(range(len(xs)), key=envelope.__getitem__)

    candidates = [0.0, upper, xs[grid_i]]
    for a in range(len(terms)):
        for b in range(a + 1, len(terms)):
            d = [u - v for u, v in zip(values[a], values[b])]
            for i in range(len(xs) - 1):
                if d[i] == 0:
                    candidates.append(xs[i])
                elif d[i] * d[i + 1] < 0:
                    candidates.append(_crossing(terms[a], terms[b], xs[i], xs[i + 1]))
    best = max(candidates, key=lambda x: (env(x), -x))
    return EnvelopeMax(env(best), best, envelope[grid_i])


def alpha_max(r: int, step: float = 1e-4) -> EnvelopeMax:
    return maximize_envelope(
        [lambda x: golovnev_term(r, x), lambda x: atsp_term(r, x)], r - 1, step)


def beta_max(r: int, step: float = 1e-4) -> EnvelopeMax:
    return maximize_envelope(
        [lambda x: hier_term(r, x), lambda x: golovnev_term(r, x),
         lambda x: atsp_term(r, x)], r - 1, step)


def level_max(r: int, levels: int, step: float = 1e-4) -> EnvelopeMax:
    """Envelope with the multi-level term in place of the two-level one."""
    return maximize_envelope(
        [lambda x: level_term(r, x, levels), lambda x: golovnev_term(r, x),
         lambda x: atsp_term(r, x)], r - 1, step)


def alpha(r: int) -> float:
    return alpha_max(r).value


def beta(r: int) -> float:
    return beta_max(r).value


@dataclass(frozen=True)
class BoundReport:
    r: int
    alpha: float
    beta: float
    argmax_x_alpha: float
    argmax_x_beta: float
    general_bound: float = GENERAL_BOUND


def bound_report(r: int) -> BoundReport:
    if r < 3:
        raise DomainError(f"bound report needs r >= 3, got {r}")
    a, b = alpha_max(r), beta_max(r)
    return BoundReport(r, a.value, b.value, a.argmax, b.argmax)


@dataclass(frozen=True)
class CurveSample:
    x: float
    term_h: float
    term_g: float
    term_a: float
    envelope: float
    # level -> value, None where the level is not defined for this r
    level_terms: dict[int, float | None] = field(default_factory=dict)


@dataclass(frozen=True)
class RatioCurve:
    r: int
    samples: tuple[CurveSample, ...]


def sample_points(upper: float, step: float) -> list[float]:
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(math.floor(upper / step + 1e-9))
    return [i * step for i in range(count + 1)]


def emit_curves(r_min: int, r_max: int, levels: Iterable[int] = (2,),
                step: float = 0.01) -> list[RatioCurve]:
    if not 3 <= r_min <= r_max:
        raise DomainError(f"need 3 <= r_min <= r_max, got {r_min}, {r_max}")
    extra = sorted({lv for lv in levels if lv != 2})
    curves = []
    for r in range(r_min, r_max + 1):
        samples = []
        for x in sample_points(r - 1, step):
            h, g, a = hier_term(r, x), golovnev_term(r, x), atsp_term(r, x)
            samples.append(CurveSample(
                x, h, g, a, min(h, g, a),
                {lv: level_term(r, x, lv) if 2 <= lv <= r - 1 else None for lv in extra},
            ))
        curves.append(RatioCurve(r, tuple(samples)))
    return curves


def curves_to_csv(curves: Sequence[RatioCurve]) -> str:
    extra = sorted({lv for c in curves for s in c.samples for lv in s.level_terms})
    header = ["r", "x", "term_hier", "term_golovnev", "term_atsp", "envelope"]
    header += [f"term_l{lv}" for lv in extra]
    lines = [",".join(header)]
    for c in curves:
        for s in c.samples:
            row = [str(c.r), repr(s.x), repr(s.term_h), repr(s.term_g),
                   repr(s.term_a), repr(s.envelope)]
            for lv in extra:
                v = s.level_terms.get(lv)
                row.append("" if v is None else repr(v))
            lines.append(",".join(row))
    return "\n".join(lines) + "\n"

