"""Resonance sets: closed forms, transcendental search, dense-scan oracles."""

import math

import pytest

from airystack.limits import (
    TransistorSpec,
    transistor_resonance_residual,
    two_layer_resonance_residual,
)
from airystack.potential import EV_TO_INVNM2
from airystack.resonance import (
    ResonanceEquation,
    find_resonances_deltaprime_2layer,
    find_resonances_transistor_deltaprime,
    resonances_delta_barrier_well,
    resonances_transistor_delta,
    scan_and_bisect,
)

EV = EV_TO_INVNM2


def dense_scan_roots(f, lo, hi, poles, n=10_000):
    """Sign-change counter oracle: n samples per pole-free piece."""
    margin = 1e-10 * (hi - lo)
    edges = [lo]
    for p in sorted(p for p in poles if lo < p < hi):
        edges.extend((p - margin, p + margin))
    edges.append(hi)
    brackets = []
    for a, b in zip(edges[::2], edges[1::2]):
        xs = [a + (b - a) * i / n for i in range(n + 1)]
        fs = [f(x) for x in xs]
        for i in range(n):
            if fs[i] == 0.0 or fs[i] * fs[i + 1] < 0.0:
                brackets.append((xs[i], xs[i + 1]))
    return brackets


# --- closed forms -----------------------------------------------------------


def test_barrier_well_set_matches_figure_values():
    rset = resonances_delta_barrier_well(
        -0.1 * EV, 10.0, (-0.6 * EV, 0.0), a1=0.5 * EV, d1=2.0, energy=0.1 * EV
    )
    got = sorted((-r.value / EV for r in rset.roots))
    assert len(got) == 3
    for val, want in zip(got, (0.050414, 0.238433, 0.501658)):
        assert val == pytest.approx(want, abs=1e-6)
    ns = sorted(r.n for r in rset.roots)
    assert ns == [2, 3, 4]
    assert all(r.trans_prob is not None and 0 < r.trans_prob < 1 for r in rset.roots)


def test_barrier_well_unbiased_root_at_zero():
    a2 = -((math.pi / 10.0) ** 2)
    rset = resonances_delta_barrier_well(a2, 10.0, (-0.1, 0.1), a1=1.0, d1=2.0)
    assert any(r.n == 1 and abs(r.value) < 1e-15 for r in rset.roots)


def test_barrier_well_empty_range():
    rset = resonances_delta_barrier_well(-0.25, 10.0, (0.5, 0.6), a1=1.0, d1=2.0)
    assert rset.roots == ()


def test_barrier_well_admissibility_flag():
    rset = resonances_delta_barrier_well(
        -0.1 * EV, 10.0, (-0.6 * EV, 0.0), a1=0.5 * EV, d1=2.0
    )
    flags = {r.n: r.admissible for r in rset.roots}
    assert flags[2] and flags[3]
    assert not flags[4]  # -b1 = 0.5017 eV marginally exceeds a1 = 0.5 eV


def test_barrier_well_sorted_ascending():
    rset = resonances_delta_barrier_well(
        -0.1 * EV, 10.0, (-0.6 * EV, 0.0), a1=0.5 * EV, d1=2.0
    )
    vals = rset.values()
    assert list(vals) == sorted(vals)


def test_transistor_delta_set_matches_figure_values():
    rset = resonances_transistor_delta(
        10.0, 0.4 * EV, a1=0.5 * EV, a3=0.5 * EV, d1=2.0, d3=2.0,
        v_cb=0.2 * EV, energy=0.1 * EV,
    )
    got = [r.value / EV for r in rset.roots]
    assert len(got) == 3
    for val, want in zip(got, (0.037604, 0.150415, 0.338433)):
        assert val == pytest.approx(want, abs=1e-6)
    assert [r.n for r in rset.roots] == [1, 2, 3]
    assert rset.roots[0].admissible and rset.roots[1].admissible
    assert not rset.roots[2].admissible  # 0.3384 eV > min(a1, a3 - vcb) = 0.3 eV


def test_transistor_delta_empty_below_first():
    rset = resonances_transistor_delta(
        10.0, 0.5 * (math.pi / 10.0) ** 2, a1=1.0, a3=1.0, d1=2.0, d3=2.0, v_cb=0.0
    )
    assert rset.roots == ()


def test_transistor_delta_scaling_law():
    kw = dict(a1=1.0, a3=1.0, d1=2.0, d3=2.0, v_cb=0.0)
    small = resonances_transistor_delta(10.0, 1.0, **kw)
    large = resonances_transistor_delta(20.0, 1.0, **kw)
    for r_small in small.roots:
        quartered = next(r for r in large.roots if r.n == r_small.n)
        assert quartered.value == pytest.approx(r_small.value / 4.0, rel=1e-12)


def test_closed_forms_agree_with_generic_scanner():
    a2, d2 = -0.1 * EV, 10.0
    closed = resonances_delta_barrier_well(a2, d2, (-0.6 * EV, 0.0), a1=0.5 * EV, d1=2.0)

    def f(b1):
        return math.sin(math.sqrt(-(a2 + b1)) * d2)

    scanned = scan_and_bisect(f, -0.6 * EV, -1e-9)
    assert len(scanned) == len(closed.roots)
    for x, root in zip(scanned, closed.values()):
        assert x == pytest.approx(root, abs=1e-12)

    d2 = 10.0
    closed = resonances_transistor_delta(d2, 1.2, a1=1.0, a3=1.0, d1=1.0, d3=1.0, v_cb=0.0)

    def g(v):
        return math.sin(math.sqrt(v) * d2)

    scanned = scan_and_bisect(g, 1e-9, 1.2)
    assert len(scanned) == len(closed.roots)
    for x, root in zip(scanned, closed.values()):
        assert x == pytest.approx(root, abs=1e-12)


# --- two-layer transcendental search ----------------------------------------


def _poles_2layer(a2, d2, lo, hi):
    poles = []
    m = 0
    while True:
        b = -(((m + 0.5) * math.pi / d2) ** 2) - a2
        if b < lo:
            break
        if b <= hi:
            poles.append(b)
        m += 1
    return poles


def test_2layer_roots_match_dense_scan(rng):
    for _ in range(10):
        a1 = rng.uniform(0.2, 2.0)
        d1 = rng.uniform(0.5, 3.0)
        a2 = rng.uniform(-1.0, 0.5)
        d2 = rng.uniform(3.0, 12.0)
        lo, hi = -2.5, min(2.5, -a2 - 1e-12 * max(1.0, abs(a2)))
        rset = find_resonances_deltaprime_2layer(a1, a2, d1, d2, (lo, 2.5))

        def f(b1):
            return two_layer_resonance_residual(a1, a2 + b1, d1, d2)[0]

        brackets = dense_scan_roots(f, lo, hi, _poles_2layer(a2, d2, lo, hi))
        assert len(brackets) == len(rset.roots)
        for (bl, bh), root in zip(brackets, rset.values()):
            assert bl - 1e-9 <= root <= bh + 1e-9


def test_2layer_residuals_small():
    rset = find_resonances_deltaprime_2layer(1.0, -0.3, 2.0, 10.0, (-2.0, 0.29))
    assert rset.roots
    for root in rset.roots:
        assert root.residual < 1e-9
        resid, scale = two_layer_resonance_residual(1.0, -0.3 + root.value, 2.0, 10.0)
        assert abs(resid) < 1e-8 * max(scale, 1.0)


def test_2layer_one_root_per_pole_branch():
    a1, a2, d1, d2 = 1.0, -0.2, 2.0, 10.0
    lo, hi = -3.0, -a2 - 1e-9
    rset = find_resonances_deltaprime_2layer(a1, a2, d1, d2, (lo, hi))
    poles = sorted(_poles_2layer(a2, d2, lo, hi))
    edges = [lo] + poles + [hi]
    for a, b in zip(edges, edges[1:]):
        inside = [v for v in rset.values() if a < v < b]
        assert len(inside) <= 1
        f_a = two_layer_resonance_residual(a1, a2 + a + 1e-9, d1, d2)[0]
        f_b = two_layer_resonance_residual(a1, a2 + b - 1e-9, d1, d2)[0]
        assert (len(inside) == 1) == (f_a * f_b < 0)


def test_2layer_roots_approach_poles_for_stiff_barrier():
    # as the barrier coefficient grows the equation balances only near the
    # tangent poles, so each root drifts toward its pole
    a2, d1, d2 = -0.2, 2.0, 10.0
    lo, hi = -3.0, -a2 - 1e-9
    poles = sorted(_poles_2layer(a2, d2, lo, hi))
    dist = {}
    for a1 in (4.0, 400.0):
        rset = find_resonances_deltaprime_2layer(a1, a2, d1, d2, (lo, hi))
        dist[a1] = [min(abs(v - p) for p in poles) for v in rset.values()]
    assert len(dist[4.0]) == len(dist[400.0])
    for d_soft, d_stiff in zip(dist[4.0], dist[400.0]):
        assert d_stiff < d_soft


def test_2layer_interval_clipped_at_branch_boundary():
    # interval straddling b1 = -a2 only searches the well side
    rset = find_resonances_deltaprime_2layer(1.0, -0.3, 2.0, 10.0, (-2.0, 5.0))
    assert all(v < 0.3 for v in rset.values())


def test_2layer_determinism():
    args = (1.0, -0.3, 2.0, 10.0, (-2.0, 0.29))
    r1 = find_resonances_deltaprime_2layer(*args)
    r2 = find_resonances_deltaprime_2layer(*args)
    assert r1.values() == r2.values()


# --- transistor transcendental search ---------------------------------------

FIG6 = dict(a1=0.5 * EV, a3=0.5 * EV, d1=2.0, d2=10.0, d3=2.0, v_cb=0.2 * EV)


def test_transistor_deltaprime_fig6_count_matches_dense_scan():
    lo, hi = 1e-6, 0.5 * EV
    rset = find_resonances_transistor_deltaprime(
        FIG6["a1"], FIG6["a3"], FIG6["d1"], FIG6["d2"], FIG6["d3"], FIG6["v_cb"], (lo, hi)
    )
    params = TransistorSpec(FIG6["a1"], FIG6["a3"], FIG6["d1"], FIG6["d2"], FIG6["d3"])

    def f(v):
        return transistor_resonance_residual(params, v)[0]

    margin = 1e-8 * max(1.0, FIG6["a3"])
    poles = []
    m = 0
    while True:
        p = ((m + 0.5) * math.pi / FIG6["d2"]) ** 2
        if p > hi:
            break
        poles.append(p)
        m += 1
    brackets = dense_scan_roots(f, max(lo, margin), min(hi, FIG6["a3"] - margin), poles)
    assert len(brackets) == len(rset.roots) > 0
    for (bl, bh), v in zip(brackets, rset.values()):
        assert bl - 1e-9 <= v <= bh + 1e-9


def test_transistor_deltaprime_residuals_and_thetas():
    rset = find_resonances_transistor_deltaprime(
        FIG6["a1"], FIG6["a3"], FIG6["d1"], FIG6["d2"], FIG6["d3"], FIG6["v_cb"],
        (1e-6, 0.5 * EV), energy=0.1 * EV,
    )
    for root in rset.roots:
        assert root.residual < 1e-9
        assert root.theta is not None and abs(root.theta) > 1.0
        assert root.trans_prob is not None and 0.0 < root.trans_prob < 1.0


def test_transistor_deltaprime_wide_base_approaches_delta_set():
    # a wide base makes the tangent term dominate: the roots sit below the
    # delta-model set by a relative offset ~ 2c/d2 with
    # c = (q1 T1 + q3 T3)/(q1 q3 T1 T3), so the sets merge as d2 grows
    offsets = {}
    for d2 in (100.0, 400.0):
        vmax = (3.2 * math.pi / d2) ** 2
        wide = find_resonances_transistor_deltaprime(
            1.0, 1.0, 2.0, d2, 2.0, 0.2, (1e-7, vmax)
        )
        delta_set = resonances_transistor_delta(
            d2, vmax, a1=1.0, a3=1.0, d1=2.0, d3=2.0, v_cb=0.2
        )
        assert len(wide.roots) >= 3
        offsets[d2] = [
            abs(g - w) / w for g, w in zip(wide.values()[:3], delta_set.values()[:3])
        ]
    t1 = math.tanh(2.0)
    predicted = 2.0 * (2.0 / t1)
    for d2, offs in offsets.items():
        for o in offs:
            assert o == pytest.approx(predicted / d2, rel=0.15)
    assert all(o < 0.012 for o in offsets[400.0])


def test_transistor_deltaprime_determinism():
    args = (FIG6["a1"], FIG6["a3"], FIG6["d1"], FIG6["d2"], FIG6["d3"], FIG6["v_cb"],
            (1e-6, 0.5 * EV))
    assert (
        find_resonances_transistor_deltaprime(*args).values()
        == find_resonances_transistor_deltaprime(*args).values()
    )


def test_equation_tags():
    rset = resonances_delta_barrier_well(-0.3, 10.0, (-1.0, 0.0), a1=1.0, d1=2.0)
    assert rset.equation is ResonanceEquation.EQ73_DELTA_BARRIER_WELL
    rset = resonances_transistor_delta(10.0, 1.0, a1=1.0, a3=1.0, d1=1.0, d3=1.0, v_cb=0.0)
    assert rset.equation is ResonanceEquation.EQ76_TRANSISTOR_DELTA
