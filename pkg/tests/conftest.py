"""Shared numerical oracles, all independent of the package's own code paths."""

import numpy as np
import pytest
from scipy.integrate import solve_ivp


def ode_layer_matrix(v0, v1, width, energy, rtol=1e-12, atol=1e-14):
    """Transfer matrix of a linear-profile layer by direct integration of the
    wave equation with canonical initial conditions (independent oracle)."""
    eta = (v1 - v0) / width

    def rhs(x, y):
        return [y[1], (v0 + eta * x - energy) * y[0]]

    cols = []
    for ic in ([1.0, 0.0], [0.0, 1.0]):
        sol = solve_ivp(rhs, (0.0, width), ic, method="DOP853", rtol=rtol, atol=atol)
        assert sol.success
        cols.append([sol.y[0, -1], sol.y[1, -1]])
    return np.array(cols).T


def ode_wronskian_route_matrix(v0, v1, width, energy):
    """Same layer via the generic route M(x1) M(x0)^-1 with non-canonical
    integrated solutions, exercising the Wronskian-ratio construction."""
    eta = (v1 - v0) / width

    def rhs(x, y):
        return [y[1], (v0 + eta * x - energy) * y[0]]

    cols0 = []
    cols1 = []
    for ic in ([1.0, 0.3], [0.2, 1.0]):
        sol = solve_ivp(rhs, (0.0, width), ic, method="DOP853", rtol=1e-12, atol=1e-14)
        assert sol.success
        cols0.append(ic)
        cols1.append([sol.y[0, -1], sol.y[1, -1]])
    m0 = np.array(cols0).T
    m1 = np.array(cols1).T
    return m1 @ np.linalg.inv(m0)


def rect_barrier_transmission(v, width, energy):
    """Closed-form flat-barrier transmission for zero leads, E < v."""
    import math

    k2 = energy
    q2 = v - energy
    k = math.sqrt(k2)
    q = math.sqrt(q2)
    s = math.sinh(q * width)
    return 1.0 / (1.0 + ((k2 + q2) ** 2 / (4.0 * k2 * q2)) * s * s)


@pytest.fixture
def rng():
    return np.random.default_rng(20260811)
