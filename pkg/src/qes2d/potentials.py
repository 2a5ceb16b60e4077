"""The three central-potential families and their effective radial potentials.

Natural units hbar = 1, mass = 1/2 are fixed throughout, so the radial
operator is -d^2/dr^2 + V_eff(r) with

    V_eff(r) = V(r) + (m^2 - 1/4) / r^2

after the r^(-1/2) reduction of the 2D Laplacian.  The families are

    sextic    V(r) = a r^2 + b r^4 + c r^6          (c > 0)
    mixed     V(r) = a r   + b r^2 + c / r          (b > 0)
    singular  V(r) = a r^2 + b/r^2 + c/r^4 + d/r^6  (a > 0, d > 0, c >= 0)

The sign conditions are exactly what the decaying-ansatz square roots
require; all other coefficient signs are unconstrained.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError, InvalidParameter

SEXTIC = "sextic"
MIXED = "mixed"
SINGULAR = "singular"


@dataclass(frozen=True)
class Sextic:
    """V(r) = a r^2 + b r^4 + c r^6."""

    a: float
    b: float
    c: float
    family = SEXTIC


@dataclass(frozen=True)
class Mixed:
    """V(r) = a r + b r^2 + c / r."""

    a: float
    b: float
    c: float
    family = MIXED


@dataclass(frozen=True)
class SingularEvenPower:
    """V(r) = a r^2 + b r^-2 + c r^-4 + d r^-6."""

    a: float
    b: float
    c: float
    d: float
    family = SINGULAR


PotentialSpec = Union[Sextic, Mixed, SingularEvenPower]


def validate(spec: PotentialSpec) -> PotentialSpec:
    """Check the family reality conditions; return the spec unchanged.

    Raises InvalidParameter when a square-root argument would be negative
    or when the singular-family exponent shift mu = c/(2 sqrt(d)) is
    undefined.  Idempotent.
    """
    for name in ("a", "b", "c", "d"):
        value = getattr(spec, name, None)
        if value is not None and not np.isfinite(value):
            raise InvalidParameter(name, value, "coefficient must be finite")
    if spec.family == SEXTIC:
        if spec.c <= 0:
            raise InvalidParameter("c", spec.c, "beta^2 = c requires c > 0")
    elif spec.family == MIXED:
        if spec.b <= 0:
            raise InvalidParameter("b", spec.b, "beta^2 = b requires b > 0")
    elif spec.family == SINGULAR:
        if spec.a <= 0:
            raise InvalidParameter("a", spec.a, "alpha^2 = a requires a > 0")
        if spec.d == 0:
            raise InvalidParameter("d", spec.d, "mu = c/(2*sqrt(d)) undefined")
        if spec.d < 0:
            raise InvalidParameter("d", spec.d, "beta^2 = d requires d > 0")
        if spec.c < 0:
            raise InvalidParameter("c", spec.c, "c >= 0 required so delta = 3/2 + mu stays positive")
    else:
        raise InvalidParameter("family", spec.family, "unknown potential family")
    return spec


def _check_radius(r):
    arr = np.asarray(r, dtype=float)
    if np.any(arr <= 0.0) or not np.all(np.isfinite(arr)):
        raise DomainError(f"radius must be positive and finite, got {r!r}")
    return arr


def _scalar_like(value, template):
    return float(value) if np.ndim(template) == 0 else value


def potential_value(spec: PotentialSpec, r):
    """Evaluate V(r).  Accepts a scalar or an array of radii, all > 0."""
    rr = _check_radius(r)
    if spec.family == SEXTIC:
        r2 = rr * rr
        out = (spec.a + (spec.b + spec.c * r2) * r2) * r2
    elif spec.family == MIXED:
        out = spec.a * rr + spec.b * rr * rr + spec.c / rr
    else:
        r2 = rr * rr
        inv2 = 1.0 / r2
        out = spec.a * r2 + (spec.b + (spec.c + spec.d * inv2) * inv2) * inv2
    return _scalar_like(out, r)


def centrifugal_term(m: int, r):
    """(m^2 - 1/4) / r^2, the 2D centrifugal term after reduction."""
    rr = _check_radius(r)
    out = (m * m - 0.25) / (rr * rr)
    return _scalar_like(out, r)


def effective_potential(spec: PotentialSpec, m: int, r):
    """V(r) + (m^2 - 1/4)/r^2, the potential seen by the reduced radial function."""
    rr = _check_radius(r)
    out = potential_value(spec, rr) + centrifugal_term(m, rr)
    return _scalar_like(out, r)


def check_angular_momentum(m) -> int:
    """Angular momentum must be a nonnegative integer."""
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool) or m < 0:
        raise InvalidParameter("m", m, "angular momentum must be a nonnegative integer")
    return int(m)
