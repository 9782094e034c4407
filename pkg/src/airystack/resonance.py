"""Resonance sets of the squeezed limits: closed forms and bracketed search.

Two of the four resonance conditions are solvable in closed form (the
barrier-well delta set and the transistor delta set); the other two are
transcendental and are found by a pole-aware uniform scan followed by
bisection.  Roots are returned sorted ascending by the tuned value with
the limit data (theta, alpha, on-resonance transmission) attached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import NotAResonanceRootError
from .limits import (
    RESIDUAL_RTOL,
    TransistorSpec,
    delta_transmission,
    limit_transmission_on_resonance,
    transistor_deltaprime_limit,
    transistor_resonance_residual,
    two_layer_resonance_residual,
    two_layer_theta_alpha,
)

__all__ = [
    "ResonanceEquation",
    "ResonanceRoot",
    "ResonanceSet",
    "scan_and_bisect",
    "resonances_delta_barrier_well",
    "resonances_transistor_delta",
    "find_resonances_deltaprime_2layer",
    "find_resonances_transistor_deltaprime",
]


class ResonanceEquation(Enum):
    EQ69_DELTAPRIME_2LAYER = "EQ69_DELTAPRIME_2LAYER"
    EQ73_DELTA_BARRIER_WELL = "EQ73_DELTA_BARRIER_WELL"
    EQ76_TRANSISTOR_DELTA = "EQ76_TRANSISTOR_DELTA"
    EQ83_TRANSISTOR_DELTAPRIME = "EQ83_TRANSISTOR_DELTAPRIME"


@dataclass(frozen=True)
class ResonanceRoot:
    """One member of a resonance set.

    value is the tuned bias in nm^-2 (b1 for the two-layer devices, the
    emitter voltage for the transistor); n is the analytic mode number
    for closed-form sets and the ascending position otherwise.
    """

    n: int
    value: float
    alpha: float
    theta: float | None = None
    trans_prob: float | None = None
    admissible: bool = True
    residual: float = 0.0


@dataclass(frozen=True)
class ResonanceSet:
    equation: ResonanceEquation
    roots: tuple[ResonanceRoot, ...]

    def values(self) -> tuple[float, ...]:
        return tuple(r.value for r in self.roots)


def scan_and_bisect(
    f,
    lo: float,
    hi: float,
    n_scan: int = 2048,
    poles: tuple[float, ...] = (),
    rel_tol: float = 1e-12,
) -> list[float]:
    """All sign-change roots of f on [lo, hi].

    The interval is pre-split at the supplied pole locations (where f
    jumps sign without a root); each pole-free piece is scanned with a
    uniform step of (hi - lo) / n_scan and sign changes are refined by
    bisection.  Deterministic: identical inputs give identical outputs.
    """
    if not hi > lo:
        return []
    step = (hi - lo) / n_scan
    margin = 1e-10 * (hi - lo)
    cuts = sorted(p for p in poles if lo < p < hi)
    edges = [lo]
    for p in cuts:
        edges.extend((p - margin, p + margin))
    edges.append(hi)
    roots: list[float] = []
    for a, b in zip(edges[::2], edges[1::2]):
        if not b > a:
            continue
        m = max(2, int(math.ceil((b - a) / step)) + 1)
        xs = [a + (b - a) * i / (m - 1) for i in range(m)]
        fs = [f(x) for x in xs]
        for i in range(m - 1):
            f0, f1 = fs[i], fs[i + 1]
            if f0 == 0.0:
                roots.append(xs[i])
                continue
            if f0 * f1 < 0.0:
                x0, x1 = xs[i], xs[i + 1]
                for _ in range(200):
                    mid = 0.5 * (x0 + x1)
                    fm = f(mid)
                    if fm == 0.0:
                        x0 = x1 = mid
                        break
                    if f0 * fm < 0.0:
                        x1 = mid
                    else:
                        x0, f0 = mid, fm
                    # true relative tolerance: small roots (steep residuals
                    # near poles) still need their full relative precision
                    if (x1 - x0) <= rel_tol * max(abs(x0), abs(x1)):
                        break
                roots.append(0.5 * (x0 + x1))
        if fs[-1] == 0.0:
            roots.append(xs[-1])
    return sorted(set(roots))


def resonances_delta_barrier_well(
    a2: float,
    d2: float,
    b1_range: tuple[float, float],
    *,
    a1: float,
    d1: float,
    energy: float | None = None,
) -> ResonanceSet:
    """Closed-form bias set of the barrier-well delta limit:
    b_1n = -(n pi / d2)^2 - a2 for n >= 1, restricted to b1_range.

    a1, d1 fix the barrier so each root carries its delta strength
    (a1 + b/2) d1; with an energy the on-resonance transmission is
    attached (left lead at zero, right lead at the cumulative bias b).
    """
    if not d2 > 0:
        raise ValueError("d2 must be positive")
    lo, hi = b1_range
    roots = []
    n = 1
    while True:
        b = -((n * math.pi / d2) ** 2) - a2
        if b < lo:
            break
        if b <= hi:
            alpha = (a1 + 0.5 * b) * d1
            trans = None
            if energy is not None:
                k = math.sqrt(energy)
                k_r = math.sqrt(energy - b)
                trans = delta_transmission(alpha, k, k_r)
            roots.append(
                ResonanceRoot(
                    n=n, value=b, alpha=alpha, trans_prob=trans, admissible=-b < a1
                )
            )
        n += 1
    roots.sort(key=lambda r: r.value)
    return ResonanceSet(ResonanceEquation.EQ73_DELTA_BARRIER_WELL, tuple(roots))


def resonances_transistor_delta(
    d2: float,
    v_eb_max: float,
    *,
    a1: float,
    a3: float,
    d1: float,
    d3: float,
    v_cb: float,
    energy: float | None = None,
) -> ResonanceSet:
    """Closed-form emitter-voltage set of the transistor delta limit:
    V_n = (n pi / d2)^2 for n >= 1 up to v_eb_max, with the summed barrier
    strength attached per root."""
    if not (d2 > 0 and v_eb_max > 0):
        raise ValueError("d2 and v_eb_max must be positive")
    roots = []
    n = 1
    while True:
        v = (n * math.pi / d2) ** 2
        if v > v_eb_max:
            break
        alpha = (a1 - 0.5 * v) * d1 + (a3 - v - 0.5 * v_cb) * d3
        trans = None
        if energy is not None:
            k = math.sqrt(energy)
            k_r = math.sqrt(energy + v + v_cb)
            trans = limit_transmission_on_resonance(1.0, alpha, k, k_r)
        roots.append(
            ResonanceRoot(
                n=n,
                value=v,
                alpha=alpha,
                theta=1.0,
                trans_prob=trans,
                admissible=v < min(a1, a3 - v_cb),
            )
        )
        n += 1
    return ResonanceSet(ResonanceEquation.EQ76_TRANSISTOR_DELTA, tuple(roots))


def find_resonances_deltaprime_2layer(
    a1: float,
    a2: float,
    d1: float,
    d2: float,
    b1_interval: tuple[float, float],
    *,
    b2: float = 0.0,
    energy: float | None = None,
) -> ResonanceSet:
    """Bias roots of the two-layer delta-prime condition
    sqrt(a1) tanh(sqrt(a1) d1) = kappa2 tan(kappa2 d2), kappa2^2 = -(a2 + b1).

    Only the well branch (a2 + b1 < 0) can resonate, so the interval is
    clipped at the branch boundary b1 = -a2.  The scan is pre-split at
    the tangent poles kappa2 d2 = (m + 1/2) pi.
    """
    if not a1 > 0:
        raise ValueError("first layer must be a barrier (a1 > 0)")
    lo, hi = b1_interval
    hi = min(hi, -a2 - 1e-12 * max(1.0, abs(a2)))
    if not hi > lo:
        return ResonanceSet(ResonanceEquation.EQ69_DELTAPRIME_2LAYER, ())

    def f(b1):
        return two_layer_resonance_residual(a1, a2 + b1, d1, d2)[0]

    poles = []
    m = 0
    while True:
        kap = (m + 0.5) * math.pi / d2
        b_pole = -(kap * kap) - a2
        if b_pole < lo:
            break
        if b_pole <= hi:
            poles.append(b_pole)
        m += 1
    xs = scan_and_bisect(f, lo, hi, poles=tuple(poles))
    accepted = []
    for b in xs:
        resid, scale = two_layer_resonance_residual(a1, a2 + b, d1, d2)
        # candidates that bisected into a tangent pole fail the residual
        # gate and are dropped; genuine roots land orders below it
        if abs(resid) <= RESIDUAL_RTOL * max(scale, 1e-300):
            accepted.append((b, resid, scale))
    roots = []
    for i, (b, resid, scale) in enumerate(accepted, start=1):
        shifted2 = a2 + b
        theta, alpha = two_layer_theta_alpha(a1, b, b2, d1, d2, shifted2)
        trans = None
        if energy is not None:
            k = math.sqrt(energy)
            k_r = math.sqrt(energy - b - b2)
            trans = limit_transmission_on_resonance(theta, alpha, k, k_r)
        roots.append(
            ResonanceRoot(
                n=i,
                value=b,
                alpha=alpha,
                theta=theta,
                trans_prob=trans,
                admissible=-b < a1,
                residual=abs(resid) / max(scale, 1e-300),
            )
        )
    return ResonanceSet(ResonanceEquation.EQ69_DELTAPRIME_2LAYER, tuple(roots))


def find_resonances_transistor_deltaprime(
    a1: float,
    a3: float,
    d1: float,
    d2: float,
    d3: float,
    v_cb: float,
    v_eb_interval: tuple[float, float],
    *,
    energy: float | None = None,
) -> ResonanceSet:
    """Emitter-voltage roots of the transistor delta-prime condition.

    The search domain is (0, a3) shrunk by a 1e-8 margin against the
    endpoint singularities; tangent poles of the base phase are split
    out analytically.  Each root is validated through the four-way theta
    cross-check before its limit data is attached.
    """
    params = TransistorSpec(a1, a3, d1, d2, d3)
    lo, hi = v_eb_interval
    margin = 1e-8 * max(1.0, a3)
    lo = max(lo, margin)
    hi = min(hi, a3 - margin)
    if not hi > lo:
        return ResonanceSet(ResonanceEquation.EQ83_TRANSISTOR_DELTAPRIME, ())

    def f(v):
        return transistor_resonance_residual(params, v)[0]

    poles = []
    m = 0
    while True:
        v_pole = ((m + 0.5) * math.pi / d2) ** 2
        if v_pole > hi:
            break
        if v_pole >= lo:
            poles.append(v_pole)
        m += 1
    xs = scan_and_bisect(f, lo, hi, poles=tuple(poles))
    accepted = []
    for v in xs:
        try:
            limit = transistor_deltaprime_limit(params, v, v_cb)
        except NotAResonanceRootError:
            # bisection converged onto a tangent pole, not a root
            continue
        accepted.append((v, limit))
    roots = []
    for i, (v, limit) in enumerate(accepted, start=1):
        resid, scale = transistor_resonance_residual(params, v)
        trans = None
        if energy is not None:
            k = math.sqrt(energy)
            k_r = math.sqrt(energy + v + v_cb)
            trans = limit_transmission_on_resonance(limit.theta, limit.alpha, k, k_r)
        roots.append(
            ResonanceRoot(
                n=i,
                value=v,
                alpha=limit.alpha,
                theta=limit.theta,
                trans_prob=trans,
                admissible=v < min(a1, a3 - v_cb),
                residual=abs(resid) / max(scale, 1e-300),
            )
        )
    return ResonanceSet(ResonanceEquation.EQ83_TRANSISTOR_DELTAPRIME, tuple(roots))
