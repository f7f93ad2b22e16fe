"""Branch-safe logarithmic kernels of the degenerate-plasma dielectric function.

Everything in this module reduces to one multivalued function,

    L(a) = ln((a + 1)/(a - 1)),

taken on the branch that is continuous from the upper half of the complex
a-plane.  Physically the frequency carries a positive infinitesimal
imaginary part (retarded response, exp(-i omega t) convention), so values
on the real axis mean the limit Im(a) -> 0+.  That limit is evaluated
analytically, never by substituting a small imaginary part:

    |Re a| > 1:   L(a) = ln|a + 1| - ln|a - 1|            (real)
    |Re a| < 1:   L(a) = ln((1 + a)/(1 - a)) - i*pi

Two kernel families sit on top of L.  Convention A scales frequencies by
k*v_F, with z = (omega + i*nu)/(k v_F) and q = k/k_F:

    g0_a(z)      = (i Im z / 2) * L(z)
    g_a(z, q, s) = ((z + s q/2)^2 - 1) / (2 q) * L(z + s q/2),   s = +-1

Convention B scales by k_F*v_F, with z = (omega + i*nu)/(k_F v_F):

    g0_b(z, q)   = (i Im z / (2 q)) * ln((z + q)/(z - q))
    g_b(z, q, s) = ((u)^2 - q^2) / (2 q^3) * ln((u + q)/(u - q)),
                   u = z + s q^2/2

The conventions agree under z_A = z_B / q.  Negative q is permitted and
obeys g_a(z, -q, +1) == -g_a(z, q, -1) identically.

All functions are scalar, pure and binary64.  Arguments exactly on a branch
point raise PoleAtBranchPoint; anything that would return inf/nan raises
NonFiniteResult instead.
"""

from __future__ import annotations

import cmath
import math

from .errors import DegenerateQ, NonFiniteResult, NonUpperHalfPlane, PoleAtBranchPoint

__all__ = ["clog_ratio", "g0_a", "g_a", "g0_b", "g_b"]

_VALID_SIGNS = (1, -1)


def _require_finite(value: complex, what: str) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFiniteResult(f"{what} overflowed or is undefined: {value!r}")
    return value


def _as_upper_half(z: complex, what: str) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteResult(f"non-finite argument to {what}: {z!r}")
    if z.imag < 0.0:
        raise NonUpperHalfPlane(f"{what} is defined for Im >= 0 only, got {z!r}")
    return z


def clog_ratio(a: complex) -> complex:
    """ln((a+1)/(a-1)) on the branch continuous from the upper half-plane.

    Real arguments are the Im(a) -> 0+ limit; inside (-1, 1) the imaginary
    part is exactly -pi.  Uses a difference of logs so near-branch-point
    arguments cannot overflow the intermediate ratio.
    """
    a = _as_upper_half(a, "clog_ratio")
    if a.imag == 0.0:
        x = a.real
        if abs(x) == 1.0:
            raise PoleAtBranchPoint(f"clog_ratio argument at branch point {x:+g}")
        if abs(x) > 1.0:
            return complex(math.log(abs(x + 1.0)) - math.log(abs(x - 1.0)), 0.0)
        return complex(math.log(1.0 + x) - math.log(1.0 - x), -math.pi)
    # Im a > 0: both a+1 and a-1 lie strictly in the upper half-plane, so the
    # principal-log difference is continuous and needs no unwinding.
    return _require_finite(cmath.log(a + 1.0) - cmath.log(a - 1.0), "clog_ratio")


def _uhp_ln_ratio(u: complex, q: float) -> complex:
    """ln((u+q)/(u-q)) for real q != 0, continuous from the upper half-plane."""
    if q > 0.0:
        return clog_ratio(u / q)
    return -clog_ratio(u / (-q))


def g0_a(z: complex) -> complex:
    """Collision-broadening kernel (i Im z / 2) ln((z+1)/(z-1)), convention A.

    Vanishes identically on the real axis (the prefactor is the limit's), so
    real z returns exactly 0 for every x, branch points included.
    """
    z = _as_upper_half(z, "g0_a")
    if z.imag == 0.0:
        return 0.0j
    return _require_finite(0.5j * z.imag * clog_ratio(z), "g0_a")


def g_a(z: complex, q: float, sign: int) -> complex:
    """Shifted Fermi-sphere kernel ((z + s q/2)^2 - 1)/(2q) L(z + s q/2).

    ``sign`` selects the +-q/2 shift (the sign does not touch the 2q
    denominator).  q = 0 raises DegenerateQ; a shifted argument of exactly
    +-1 raises PoleAtBranchPoint.
    """
    if sign not in _VALID_SIGNS:
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    q = float(q)
    if q == 0.0:
        raise DegenerateQ("g_a needs q != 0")
    z = _as_upper_half(z, "g_a")
    a = z + sign * (q / 2.0)
    value = (a * a - 1.0) / (2.0 * q) * clog_ratio(a)
    return _require_finite(value, "g_a")


def g0_b(z: complex, q: float) -> complex:
    """(i Im z / (2q)) ln((z+q)/(z-q)), convention B.

    Even in q, and equal to g0_a(z/q).  Real z returns exactly 0.
    """
    q = float(q)
    if q == 0.0:
        raise DegenerateQ("g0_b needs q != 0")
    z = _as_upper_half(z, "g0_b")
    if z.imag == 0.0:
        return 0.0j
    value = 1j * z.imag / (2.0 * q) * _uhp_ln_ratio(z, q)
    return _require_finite(value, "g0_b")


def g_b(z: complex, q: float, sign: int) -> complex:
    """Convention-B sphere kernel with u = z + s q^2/2:

        ((u)^2 - q^2) / (2 q^3) * ln((u + q)/(u - q)).

    Equal to g_a(z/q, q, sign) under the convention map.  u = +-q raises
    PoleAtBranchPoint.
    """
    if sign not in _VALID_SIGNS:
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    q = float(q)
    if q == 0.0:
        raise DegenerateQ("g_b needs q != 0")
    z = _as_upper_half(z, "g_b")
    u = z + sign * (q * q / 2.0)
    value = (u * u - q * q) / (2.0 * q ** 3) * _uhp_ln_ratio(u, q)
    return _require_finite(value, "g_b")
