"""Longitudinal dielectric function and conductivity of the degenerate
collisional electron plasma.

Three model families are implemented, all built from the kernels in
:mod:`qplasma.kernels` and all dimensionless:

* ``epsilon_collisional_a`` / ``epsilon_collisional_b`` -- the BGK
  (relaxation-time, coordinate-space) model

      eps = 1 + (3/2) xp^2 * (1 - g(z,+q) + g(z,-q)) / (1 - g0(z))

  in the per-k (A) and per-k_F (B) dimensionless conventions;

* ``epsilon_lindhard`` -- the collisionless (RPA) limit, y = 0;

* ``epsilon_mermin`` -- the particle-conserving momentum-space relaxation
  model,

      eps = 1 + (3/2) xp^2 * z N(z,q) / (x + i y N(z,q)/N0(q)),

  with N(z,q) = 1 - g(z,+q) + g(z,-q) and the static screening combination
  N0(q) = 1 - g(0+,q) + g(0-,q).

Branch-handling note for the static regime q < 2 (w = q/2 < 1): under the
upper-half-plane limit the two static kernels are not exact negatives of
each other -- g(0-,q) = -conj(g(0+,q)) -- but their -i*pi parts cancel in
the combination N0, which is therefore real for every w != 1.  The static
functions here always use the full combination, which keeps the static
dielectric function real, makes the Mermin model conjugation-symmetric,
and makes the omega -> 0 limit of the collisional model continuous.

Conjugation symmetry eps(-x, y, q) = conj(eps(x, y, q)) holds for every
model, so all of them are real at x = 0.  All routines are pure functions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import (
    DegenerateQ,
    DenominatorVanishes,
    DivisionByZeroFrequency,
    NonFiniteResult,
    StaticDenominatorVanishes,
)
from .kernels import clog_ratio, g0_a, g0_b, g_a, g_b

__all__ = [
    "Model",
    "DimensionlessPointA",
    "DimensionlessPointB",
    "DielectricResult",
    "epsilon_collisional_a",
    "epsilon_collisional_b",
    "epsilon_lindhard",
    "epsilon_mermin",
    "epsilon_static_mermin",
    "epsilon_static_collisional",
    "epsilon_classical_limit",
    "sigma_longitudinal",
    "branch_points_q",
]

_DENOMINATOR_FLOOR = 1e-30


class Model(enum.Enum):
    """Which closed form produced a DielectricResult."""

    CollisionalBGK = "bgk"
    Lindhard = "lindhard"
    Mermin = "mermin"
    StaticMermin = "static-mermin"
    StaticCollisional = "static-collisional"
    ClassicalLimit = "classical-limit"


@dataclass(frozen=True)
class DimensionlessPointA:
    """Per-k dimensionless point: x = omega/(k vF), y = nu/(k vF),
    q = k/k_F, xp = omega_p/(k vF)."""

    x: float
    y: float
    q: float
    xp: float

    def __post_init__(self) -> None:
        if self.y < 0.0:
            raise ValueError(f"y must be >= 0, got {self.y}")
        if self.xp < 0.0:
            raise ValueError(f"xp must be >= 0, got {self.xp}")
        if self.q == 0.0:
            raise DegenerateQ("q = 0: use epsilon_classical_limit")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class DimensionlessPointB:
    """Per-k_F dimensionless point: x = omega/(k_F vF), y = nu/(k_F vF),
    q = k/k_F, xp2 = (omega_p/(k_F vF))^2."""

    x: float
    y: float
    q: float
    xp2: float

    def __post_init__(self) -> None:
        if self.y < 0.0:
            raise ValueError(f"y must be >= 0, got {self.y}")
        if self.xp2 < 0.0:
            raise ValueError(f"xp2 must be >= 0, got {self.xp2}")
        if self.q == 0.0:
            raise DegenerateQ("q = 0: use epsilon_classical_limit")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class DielectricResult:
    """Complex permittivity, the matching dimensionless conductivity (when
    the model defines one) and the model tag.

    ``sigma`` is sigma_l/sigma_0 for collisional points with y > 0; for
    y = 0 it is the collisionless form sigma_l * m k vF / (e^2 N), which
    stays finite as nu -> 0.  Models without a published conductivity
    (Mermin, static, classical) carry ``sigma = None``.
    """

    epsilon: complex
    sigma: complex | None
    model: Model


def _finite(value: complex, what: str) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFiniteResult(f"{what} is not finite: {value!r}")
    return value


def _numerator(z: complex, q: float) -> complex:
    """N(z, q) = 1 - g(z,+q) + g(z,-q)."""
    return 1.0 - g_a(z, q, +1) + g_a(z, q, -1)


def _collisional_ratio(z: complex, q: float) -> complex:
    """N(z,q) / (1 - g0(z)), the kernel ratio shared by eps and sigma."""
    den = 1.0 - g0_a(z)
    if abs(den) < _DENOMINATOR_FLOOR:
        raise DenominatorVanishes(f"|1 - g0({z!r})| < {_DENOMINATOR_FLOOR}")
    return _numerator(z, q) / den


def _static_numerator(q: float) -> complex:
    """N0(q) = 1 - g(0+,q) + g(0-,q); real (the -i*pi parts cancel exactly)."""
    n0 = _numerator(0.0j, q)
    if abs(n0) < _DENOMINATOR_FLOOR:
        raise StaticDenominatorVanishes(f"static combination vanished at q={q}")
    return n0


def epsilon_collisional_a(p: DimensionlessPointA) -> DielectricResult:
    """BGK-model permittivity in convention A.

    eps = 1 + (3/2) xp^2 N(z,q)/(1 - g0(z)); sigma is filled through the
    eps = 1 + 4*pi*i*sigma/omega duality recast dimensionlessly.
    """
    z = p.z
    ratio = _collisional_ratio(z, p.q)
    eps = _finite(1.0 + 1.5 * p.xp ** 2 * ratio, "epsilon_collisional_a")
    if p.y == 0.0:
        sigma = -1.5j * p.x * ratio
    else:
        sigma = -1.5j * (p.x * p.y) * ratio
    return DielectricResult(eps, _finite(sigma, "sigma"), Model.CollisionalBGK)


def epsilon_collisional_b(p: DimensionlessPointB) -> DielectricResult:
    """BGK-model permittivity in convention B:
    eps = 1 + (3 xp2 / (2 q^2)) (1 - g+(z,q) + g-(z,q)) / (1 - g0(z,q))."""
    z = p.z
    den = 1.0 - g0_b(z, p.q)
    if abs(den) < _DENOMINATOR_FLOOR:
        raise DenominatorVanishes(f"|1 - g0_b({z!r}, {p.q})| < {_DENOMINATOR_FLOOR}")
    ratio = (1.0 - g_b(z, p.q, +1) + g_b(z, p.q, -1)) / den
    eps = _finite(1.0 + 1.5 * p.xp2 / p.q ** 2 * ratio, "epsilon_collisional_b")
    if p.y == 0.0:
        sigma = -1.5j * (p.x / p.q) * ratio
    else:
        sigma = -1.5j * (p.x * p.y / p.q ** 2) * ratio
    return DielectricResult(eps, _finite(sigma, "sigma"), Model.CollisionalBGK)


def epsilon_lindhard(x: float, q: float, xp: float) -> DielectricResult:
    """Collisionless (RPA) permittivity, the y = 0 limit of both the BGK and
    Mermin models: eps = 1 + (3/2) xp^2 (1 - g(x,+q) + g(x,-q))."""
    if xp < 0.0:
        raise ValueError(f"xp must be >= 0, got {xp}")
    z = complex(float(x), 0.0)
    n = _numerator(z, q)
    eps = _finite(1.0 + 1.5 * xp ** 2 * n, "epsilon_lindhard")
    sigma = -1.5j * z.real * n
    return DielectricResult(eps, sigma, Model.Lindhard)


def epsilon_mermin(p: DimensionlessPointA) -> DielectricResult:
    """Particle-conserving (Mermin) permittivity.

    x = 0 routes directly to the static value, which is independent of y;
    y = 0 reduces to the Lindhard form.  Otherwise

        eps = 1 + (3/2) xp^2 z N(z,q) / (x + i y N(z,q)/N0(q)).
    """
    if p.x == 0.0:
        eps = _finite(1.0 + 1.5 * p.xp ** 2 * _static_numerator(p.q), "epsilon_mermin")
        return DielectricResult(eps, None, Model.Mermin)
    z = p.z
    n = _numerator(z, p.q)
    if p.y == 0.0:
        eps = _finite(1.0 + 1.5 * p.xp ** 2 * n, "epsilon_mermin")
        return DielectricResult(eps, None, Model.Mermin)
    n0 = _static_numerator(p.q)
    den = p.x + 1j * p.y * n / n0
    if abs(den) < _DENOMINATOR_FLOOR:
        raise DenominatorVanishes(f"Mermin denominator vanished at {p!r}")
    eps = _finite(1.0 + 1.5 * p.xp ** 2 * (z * n) / den, "epsilon_mermin")
    return DielectricResult(eps, None, Model.Mermin)


def epsilon_static_mermin(w: float, xp: float) -> DielectricResult:
    """Static (omega = 0) Mermin permittivity at half-wavenumber w = q/2:

        eps = 1 + (3/2) xp^2 [1 - (w^2-1)/(2w) ln|(w+1)/(w-1)|].

    Real for every w != 1 (see the module docstring for the w < 1 branch
    discussion); w = 1 is the Kohn branch point and raises.
    """
    w = float(w)
    if w <= 0.0:
        raise ValueError(f"w must be > 0, got {w}")
    if xp < 0.0:
        raise ValueError(f"xp must be >= 0, got {xp}")
    eps = _finite(1.0 + 1.5 * xp ** 2 * _static_numerator(2.0 * w), "epsilon_static_mermin")
    return DielectricResult(eps, None, Model.StaticMermin)


def epsilon_static_collisional(y: float, w: float, xp: float) -> DielectricResult:
    """Static limit of the BGK model at half-wavenumber w = q/2:

        eps = 1 + (3/2) xp^2 [1 - (iy/2) ln((iy+1)/(iy-1))]^(-1)
              * [1 - ((iy+w)^2-1)/(4w) ln((iy+w+1)/(iy+w-1))
                   + ((iy-w)^2-1)/(4w) ln((iy-w+1)/(iy-w-1))].

    Identical arithmetic to epsilon_collisional_a at x = 0, q = 2w, hence
    real for all y >= 0; at y = 0 it coincides with the static Mermin value.
    """
    w = float(w)
    y = float(y)
    if w <= 0.0:
        raise ValueError(f"w must be > 0, got {w}")
    if y < 0.0:
        raise ValueError(f"y must be >= 0, got {y}")
    if xp < 0.0:
        raise ValueError(f"xp must be >= 0, got {xp}")
    ratio = _collisional_ratio(complex(0.0, y), 2.0 * w)
    eps = _finite(1.0 + 1.5 * xp ** 2 * ratio, "epsilon_static_collisional")
    return DielectricResult(eps, None, Model.StaticCollisional)


def epsilon_classical_limit(z: complex, xp: float) -> DielectricResult:
    """q -> 0 (vanishing hbar) limit of the BGK model:

        eps = 1 + (3/2) xp^2 (2 - z L(z)) / (1 - (i Im z / 2) L(z)).

    The numerator is the q -> 0 limit of 1 - g(z,+q) + g(z,-q); the limit is
    cross-checked numerically in the test suite via q in {1e-2, 1e-3, 1e-4}
    with a Richardson extrapolation in q^2.
    """
    z = complex(z)
    if xp < 0.0:
        raise ValueError(f"xp must be >= 0, got {xp}")
    ell = clog_ratio(z)
    num = 2.0 - z * ell
    den = 1.0 - 0.5j * z.imag * ell if z.imag != 0.0 else 1.0 + 0.0j
    if abs(den) < _DENOMINATOR_FLOOR:
        raise DenominatorVanishes(f"classical-limit denominator vanished at {z!r}")
    eps = _finite(1.0 + 1.5 * xp ** 2 * num / den, "epsilon_classical_limit")
    return DielectricResult(eps, None, Model.ClassicalLimit)


def sigma_longitudinal(p: DimensionlessPointA) -> complex:
    """Longitudinal conductivity of the BGK model.

    For y > 0 the value is sigma_l/sigma_0 = -(3i/2) x y N(z,q)/(1 - g0(z))
    with sigma_0 = e^2 N/(m nu); for y = 0 sigma_0 diverges, so the
    collisionless normalisation sigma_l m k vF/(e^2 N) = -(3i/2) x N is
    returned instead.  x = 0 raises DivisionByZeroFrequency: the duality
    eps = 1 + 4*pi*i*sigma/omega cannot be inverted at omega = 0.
    """
    if p.x == 0.0:
        raise DivisionByZeroFrequency("sigma_0-normalised conductivity needs omega != 0")
    ratio = _collisional_ratio(p.z, p.q)
    if p.y == 0.0:
        return _finite(-1.5j * p.x * ratio, "sigma_longitudinal")
    return _finite(-1.5j * (p.x * p.y) * ratio, "sigma_longitudinal")


def branch_points_q(x: float) -> tuple[float, ...]:
    """Wavenumbers q where the y = 0 kernels hit their log branch points at
    fixed x (shifted argument x +- q/2 = +-1): +-2(1-x), +-2(1+x)."""
    x = float(x)
    return (2.0 * (1.0 - x), 2.0 * (1.0 + x), -2.0 * (1.0 - x), -2.0 * (1.0 + x))
