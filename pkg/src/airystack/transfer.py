"""2x2 transfer matrices for constant and linear potential layers.

The matrix maps (psi, psi') at the left edge of a layer to the right
edge; a structure's matrix is the right-to-left product over its layers.
All matrices are real with unit determinant.  Evanescent regions go
through the hyperbolic / Airy representations, never complex wavenumbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .airy import airy_eval_scaled
from .errors import DegenerateSlopeError
from .potential import ConcreteLayer

__all__ = [
    "TransferMatrix",
    "AiryLayerParams",
    "layer_matrix_constant",
    "layer_matrix_linear",
    "layer_matrix",
    "airy_layer_params",
    "structure_matrix",
    "slope_is_degenerate",
]


@dataclass(frozen=True)
class TransferMatrix:
    """Real 2x2 connection matrix; l12 carries nm, l21 carries nm^-1."""

    l11: float
    l12: float
    l21: float
    l22: float

    def det(self) -> float:
        return self.l11 * self.l22 - self.l12 * self.l21

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        return TransferMatrix(
            self.l11 * other.l11 + self.l12 * other.l21,
            self.l11 * other.l12 + self.l12 * other.l22,
            self.l21 * other.l11 + self.l22 * other.l21,
            self.l21 * other.l12 + self.l22 * other.l22,
        )

    @staticmethod
    def identity() -> "TransferMatrix":
        return TransferMatrix(1.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class AiryLayerParams:
    """Airy-variable geometry of one linear layer.

    z(x) = sigma * (x - s) with s measured from the layer's left edge;
    sigma is the sign-carrying cube root of the slope, so z_left/z_right
    equal -k^2 / sigma^2 at the respective edges.
    """

    sigma: float
    s: float
    z_left: float
    z_right: float
    k2_left: float
    k2_right: float


def slope_is_degenerate(layer: ConcreteLayer, energy: float) -> bool:
    """True when the tilt is too small for the Airy route to be stable.

    sigma -> 0 makes the Airy elements 0*inf-indeterminate well before
    the limit matrix stops being finite, so below this threshold the
    constant-profile formula is the accurate branch.
    """
    dv = abs(layer.v_right_edge - layer.v_left_edge)
    return dv < 1e-9 * max(1.0, abs(layer.v_left_edge), abs(energy))


def airy_layer_params(layer: ConcreteLayer, energy: float) -> AiryLayerParams:
    if slope_is_degenerate(layer, energy):
        raise DegenerateSlopeError(
            f"slope {layer.slope!r} below threshold; use layer_matrix_constant"
        )
    eta = layer.slope
    sigma = math.copysign(abs(eta) ** (1.0 / 3.0), eta)
    s2 = sigma * sigma
    k2_left = energy - layer.v_left_edge
    k2_right = energy - layer.v_right_edge
    s = layer.width + (energy - layer.v_right_edge) / eta
    return AiryLayerParams(
        sigma=sigma,
        s=s,
        z_left=-k2_left / s2,
        z_right=-k2_right / s2,
        k2_left=k2_left,
        k2_right=k2_right,
    )


def layer_matrix_constant(v: float, width: float, energy: float) -> TransferMatrix:
    """Flat-layer matrix: trig above the potential, hyperbolic below."""
    if not width > 0:
        raise ValueError("width must be positive")
    k2 = energy - v
    if k2 > 0.0:
        k = math.sqrt(k2)
        c = math.cos(k * width)
        s = math.sin(k * width)
        return TransferMatrix(c, s / k, -k * s, c)
    if k2 < 0.0:
        q = math.sqrt(-k2)
        c = math.cosh(q * width)
        s = math.sinh(q * width)
        return TransferMatrix(c, s / q, q * s, c)
    return TransferMatrix(1.0, width, 0.0, 1.0)


def _combine(c_a: float, e_a: float, c_b: float, e_b: float) -> float:
    # c_a * exp(e_a) - c_b * exp(e_b) with the common scale factored out,
    # so barrier-side products never overflow before the result does.
    m = e_a if e_a >= e_b else e_b
    return (c_a * math.exp(e_a - m) - c_b * math.exp(e_b - m)) * math.exp(m)


def layer_matrix_linear(layer: ConcreteLayer, energy: float) -> TransferMatrix:
    """Tilted-layer matrix from scaled Airy products.

    Each element is a pi-weighted difference of Ai/Bi cross products at
    the two edge arguments.  The exponents e^{\\pm zeta} are summed
    symbolically first: Ai-type factors contribute -zeta, Bi-type +zeta,
    and only the combined exponent is ever exponentiated.
    """
    p = airy_layer_params(layer, energy)
    qa = airy_eval_scaled(p.z_left)
    qb = airy_eval_scaled(p.z_right)
    za, zb = qa.exponent, qb.exponent
    pi = math.pi
    l11 = pi * _combine(qb.ai_scaled * qa.bi_prime_scaled, za - zb,
                        qa.ai_prime_scaled * qb.bi_scaled, zb - za)
    l12 = (pi / p.sigma) * _combine(qa.ai_scaled * qb.bi_scaled, zb - za,
                                    qb.ai_scaled * qa.bi_scaled, za - zb)
    l21 = p.sigma * pi * _combine(qb.ai_prime_scaled * qa.bi_prime_scaled, za - zb,
                                  qa.ai_prime_scaled * qb.bi_prime_scaled, zb - za)
    l22 = pi * _combine(qa.ai_scaled * qb.bi_prime_scaled, zb - za,
                        qb.ai_prime_scaled * qa.bi_scaled, za - zb)
    return TransferMatrix(l11, l12, l21, l22)


def layer_matrix(layer: ConcreteLayer, energy: float) -> TransferMatrix:
    """Per-layer dispatcher: constant formula when the tilt is degenerate."""
    if slope_is_degenerate(layer, energy):
        v_mid = 0.5 * (layer.v_left_edge + layer.v_right_edge)
        return layer_matrix_constant(v_mid, layer.width, energy)
    return layer_matrix_linear(layer, energy)


def structure_matrix(layers: list[ConcreteLayer], energy: float) -> TransferMatrix:
    """Right-to-left product Lambda_N ... Lambda_1 over the stack."""
    if not layers:
        raise ValueError("structure_matrix needs at least one layer")
    total = TransferMatrix.identity()
    for layer in layers:
        total = layer_matrix(layer, energy) @ total
    return total
