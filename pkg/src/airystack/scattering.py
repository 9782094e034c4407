"""Reflection/transmission amplitudes and probabilities from a transfer matrix.

Probabilities are computed from the real combinations p and q rather than
from |amplitude|^2, which avoids catastrophic cancellation at near-total
reflection; the complex amplitudes are reported alongside and agree with
the probabilities by construction (conservation R + T = 1 is exact).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import EvanescentLeadError
from .transfer import TransferMatrix

__all__ = ["ScatteringResult", "scatter", "s_matrix"]


@dataclass(frozen=True)
class ScatteringResult:
    r_left: complex
    t_left: complex
    r_right: complex
    t_right: complex
    refl_prob: float
    trans_prob: float
    p: float
    q: float
    d_denom: complex
    k_left: float
    k_right: float


def scatter(
    matrix: TransferMatrix, v_left: float, v_right: float, energy: float
) -> ScatteringResult:
    """Scatter a plane wave against the structure matrix.

    Both leads must be propagating: energy strictly above each lead
    potential.  Bound states and evanescent leads are out of scope.
    """
    if energy <= v_left or energy <= v_right:
        raise EvanescentLeadError(
            f"energy {energy!r} not above lead potentials ({v_left!r}, {v_right!r})"
        )
    k_l = math.sqrt(energy - v_left)
    k_r = math.sqrt(energy - v_right)
    ratio = k_l / k_r
    p = matrix.l11 - ratio * matrix.l22
    q = k_l * matrix.l12 + matrix.l21 / k_r
    d = complex(matrix.l11 + ratio * matrix.l22, -(k_l * matrix.l12 - matrix.l21 / k_r))
    r_left = -(p + 1j * q) / d
    t_left = 2.0 * ratio / d
    r_right = (p - 1j * q) / d
    t_right = 2.0 / d
    four_r = 4.0 * ratio
    denom = four_r + p * p + q * q
    if math.isinf(denom):
        refl, trans = 1.0, 0.0
    else:
        refl = (p * p + q * q) / denom
        trans = four_r / denom
    return ScatteringResult(
        r_left=r_left,
        t_left=t_left,
        r_right=r_right,
        t_right=t_right,
        refl_prob=refl,
        trans_prob=trans,
        p=p,
        q=q,
        d_denom=d,
        k_left=k_l,
        k_right=k_r,
    )


def s_matrix(result: ScatteringResult) -> np.ndarray:
    """Unitary 2x2 scattering matrix built from the flux-normalized amplitudes."""
    root = cmath.sqrt(result.k_left / result.k_right)
    return np.array(
        [
            [result.r_left, root * result.t_right],
            [result.t_left / root, result.r_right],
        ],
        dtype=complex,
    )
