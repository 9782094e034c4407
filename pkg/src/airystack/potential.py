"""Squeeze-parametrized multilayer structures and their realized profiles.

A structure is a stack of layers, each described by five numbers
(a, b, d, mu, nu).  At squeeze parameter eps the layer occupies width
eps*d and runs linearly from (a + sum of upstream biases) * eps^-mu to
that value plus b * eps^-nu.  At eps = 1 these are the raw device values.

Energies and potentials are nm^-2 throughout (hbar^2 / 2m* = 1 with
m* = 0.1 m_e); eV appears only at the config/CLI boundary.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import BiasFreeLayerError

__all__ = [
    "EV_TO_INVNM2",
    "ev_to_invnm2",
    "invnm2_to_ev",
    "LayerSpec",
    "StructureSpec",
    "ConcreteLayer",
    "DerivedCoefficients",
    "RegionClass",
    "realize",
    "derived_coefficients",
    "classify_region",
]

EV_TO_INVNM2 = 2.62464  # 1 eV in nm^-2 for m* = 0.1 m_e


def ev_to_invnm2(e: float) -> float:
    return e * EV_TO_INVNM2


def invnm2_to_ev(v: float) -> float:
    return v / EV_TO_INVNM2


@dataclass(frozen=True)
class LayerSpec:
    """One layer: left-edge coefficient a, bias increment b, width d,
    divergence powers mu (left edge) and nu (bias)."""

    a: float
    b: float
    d: float
    mu: float
    nu: float

    def __post_init__(self):
        if not self.d > 0:
            raise ValueError(f"layer width d must be positive, got {self.d!r}")
        if self.mu < 0 or self.nu < 0:
            raise ValueError("powers mu, nu must be non-negative")
        if self.mu > 0 and self.nu > self.mu:
            raise ValueError(f"nu = {self.nu!r} exceeds mu = {self.mu!r}")
        if self.mu == 0 and self.nu != 0:
            raise ValueError("mu = 0 requires nu = 0")


@dataclass(frozen=True)
class StructureSpec:
    """Ordered layer stack plus lead potentials.

    The right lead defaults to v_left + sum(b_i): the face-value cumulative
    bias, independent of eps.  Leads are physical constants; continuity
    with the (diverging) layer edges is not required.
    """

    layers: tuple[LayerSpec, ...]
    v_left: float = 0.0
    v_right_override: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if len(self.layers) < 1:
            raise ValueError("structure needs at least one layer")

    def cumulative_bias(self, upto: int | None = None) -> float:
        """Sum of b_j for j < upto (all layers when upto is None)."""
        end = len(self.layers) if upto is None else upto
        return math.fsum(layer.b for layer in self.layers[:end])

    def lead_potentials(self) -> tuple[float, float]:
        v_right = (
            self.v_right_override
            if self.v_right_override is not None
            else self.v_left + self.cumulative_bias()
        )
        return self.v_left, v_right

    def replace_bias(self, index: int, b: float) -> "StructureSpec":
        """Copy with layer `index` given bias b (used by parameter sweeps)."""
        layers = list(self.layers)
        old = layers[index]
        layers[index] = LayerSpec(old.a, b, old.d, old.mu, old.nu)
        return StructureSpec(tuple(layers), self.v_left, self.v_right_override)


@dataclass(frozen=True)
class ConcreteLayer:
    """Realized layer at a fixed eps: edge potentials and physical width."""

    v_left_edge: float
    v_right_edge: float
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError(f"layer width must be positive, got {self.width!r}")

    @property
    def slope(self) -> float:
        return (self.v_right_edge - self.v_left_edge) / self.width


def realize(spec: StructureSpec, epsilon: float) -> list[ConcreteLayer]:
    """Concrete per-layer potentials at the given squeeze parameter."""
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    out = []
    shift = 0.0
    for layer in spec.layers:
        v_left = (layer.a + shift) * epsilon ** -layer.mu
        v_right = v_left + layer.b * epsilon ** -layer.nu
        out.append(ConcreteLayer(v_left, v_right, epsilon * layer.d))
        shift += layer.b
    return out


@dataclass(frozen=True)
class DerivedCoefficients:
    """Per-layer quantities entering the squeezed-limit formulas.

    kappa is sqrt(-(a + upstream bias)); when the shifted coefficient is
    positive (barrier) kappa stores sqrt(+shifted) and kappa_is_imaginary
    is set.  c1/c2 carry (d/b)^2 and are undefined for bias-free layers.
    """

    alpha: float
    kappa: float
    kappa_is_imaginary: bool
    shifted_a: float
    _g: complex | None = field(repr=False, default=None)
    _c1: float | None = field(repr=False, default=None)
    _c2: float | None = field(repr=False, default=None)

    @property
    def kappa_complex(self) -> complex:
        return 1j * self.kappa if self.kappa_is_imaginary else complex(self.kappa)

    @property
    def g(self) -> complex:
        if self._g is None:
            raise BiasFreeLayerError("g undefined: layer has b = 0")
        return self._g

    @property
    def c1(self) -> float:
        if self._c1 is None:
            raise BiasFreeLayerError("c1 undefined: layer has b = 0")
        return self._c1

    @property
    def c2(self) -> float:
        if self._c2 is None:
            raise BiasFreeLayerError("c2 undefined: layer has b = 0")
        return self._c2


def derived_coefficients(spec: StructureSpec, layer_index: int) -> DerivedCoefficients:
    layer = spec.layers[layer_index]
    shift = spec.cumulative_bias(layer_index)
    shifted = layer.a + shift
    alpha = (shifted + 0.5 * layer.b) * layer.d
    imaginary = shifted > 0
    kappa = math.sqrt(shifted if imaginary else -shifted)
    if layer.b != 0.0:
        kc = cmath.sqrt(complex(-shifted))
        g = layer.b / (4.0 * kc**3 * layer.d) if kc != 0 else complex(math.inf)
        ratio = (layer.d / layer.b) ** 2
        c1 = 0.5 * shifted**2 * (shifted + layer.b) * ratio
        c2 = 0.5 * shifted * (shifted + layer.b) ** 2 * ratio
        return DerivedCoefficients(alpha, kappa, imaginary, shifted, g, c1, c2)
    return DerivedCoefficients(alpha, kappa, imaginary, shifted)


class RegionClass(Enum):
    """Asymptotic classes on the (mu, nu) power plane.

    S0 / S_INF: the Airy arguments shrink to 0 / diverge as eps -> 0,
    per the sign of the exponent 2(1+nu)/3 - mu.  Named lines bound the
    two sets; named points are the squeezes treated in closed form.
    """

    S0 = "S0"
    S_INF = "S_INF"
    L0_INF = "L0_INF"
    L0_1 = "L0_1"
    L0_2 = "L0_2"
    L_INF_1 = "L_INF_1"
    L_INF_2 = "L_INF_2"
    P11 = "P11"
    P20 = "P20"
    P21 = "P21"
    OUTSIDE = "OUTSIDE"


def classify_region(mu: float, nu: float, tol: float = 1e-12) -> RegionClass:
    """Partition of the admissible power plane; points beat lines beat sets."""

    def eq(x, y):
        return abs(x - y) <= tol

    if not (mu > tol and -tol <= nu <= mu + tol and mu <= 2.0 + tol):
        return RegionClass.OUTSIDE
    if eq(mu, 1.0) and eq(nu, 1.0):
        return RegionClass.P11
    if eq(mu, 2.0) and eq(nu, 0.0):
        return RegionClass.P20
    if eq(mu, 2.0) and eq(nu, 1.0):
        return RegionClass.P21
    if eq(nu, 1.5 * mu - 1.0):
        return RegionClass.L0_INF
    if eq(nu, 0.0) and mu < 2.0 / 3.0:
        return RegionClass.L0_1
    if eq(nu, mu) and mu < 2.0 - tol:
        return RegionClass.L0_2
    if eq(nu, 0.0) and mu > 2.0 / 3.0:
        return RegionClass.L_INF_1
    if eq(mu, 2.0) and 0.0 < nu < 2.0:
        return RegionClass.L_INF_2
    exponent = 2.0 * (1.0 + nu) / 3.0 - mu
    if exponent > 0:
        return RegionClass.S0 if mu < 2.0 else RegionClass.OUTSIDE
    if exponent < 0:
        return RegionClass.S_INF
    return RegionClass.L0_INF
