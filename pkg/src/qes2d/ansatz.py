"""Exponential-prefactor parameters for the decaying radial ansatz.

Every family writes the radial eigenfunction as

    R(r) = exp(p(r)) * sum_k a_k r^(k*step + delta)

with a family-specific exponent p(r):

    sextic    p = alpha r^2 / 2 + beta r^4 / 4,   alpha = -b/(2 sqrt(c)),  beta = -sqrt(c)
    mixed     p = alpha r + beta r^2 / 2,         alpha = -a/(2 sqrt(b)),  beta = -sqrt(b)
    singular  p = alpha r^2 / 2 + beta r^-2 / 2,  alpha = -sqrt(a),        beta = -sqrt(d)

The negative root branch is hard-selected: it is the only
square-integrable choice at infinity, and for the singular family
beta < 0 additionally forces double-exponential decay at the origin.
The leading power delta solves the indicial condition C_0 = 0 of the
series recurrence: delta = m + 1/2 for sextic/mixed, and
delta = 3/2 + mu with mu = c/(2 sqrt(d)) for the singular family.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .potentials import (
    MIXED,
    SEXTIC,
    SINGULAR,
    PotentialSpec,
    check_angular_momentum,
    validate,
)


@dataclass(frozen=True)
class AnsatzProfile:
    family: str
    alpha: float
    beta: float
    delta: float
    mu: float
    step: int


def build_profile(spec: PotentialSpec, m: int) -> AnsatzProfile:
    """Decaying-branch ansatz parameters for a validated spec at angular momentum m."""
    validate(spec)
    m = check_angular_momentum(m)
    if spec.family == SEXTIC:
        beta = -np.sqrt(spec.c)
        alpha = -spec.b / (2.0 * np.sqrt(spec.c))
        return AnsatzProfile(SEXTIC, float(alpha), float(beta), m + 0.5, 0.0, 2)
    if spec.family == MIXED:
        beta = -np.sqrt(spec.b)
        alpha = -spec.a / (2.0 * np.sqrt(spec.b))
        return AnsatzProfile(MIXED, float(alpha), float(beta), m + 0.5, 0.0, 1)
    # Singular family: delta comes from the indicial condition
    # beta*(3 - 2*delta) - c = 0, which with beta = -sqrt(d) is 3/2 + mu.
    alpha = -np.sqrt(spec.a)
    beta = -np.sqrt(spec.d)
    mu = spec.c / (2.0 * np.sqrt(spec.d))
    delta = 1.5 - spec.c / (2.0 * beta)
    return AnsatzProfile(SINGULAR, float(alpha), float(beta), float(delta), float(mu), 2)


def prefactor_and_derivatives(profile: AnsatzProfile, r):
    """Exponent p(r) and its first two derivatives; scalar or array r > 0."""
    rr = np.asarray(r, dtype=float)
    if np.any(rr <= 0.0) or not np.all(np.isfinite(rr)):
        raise DomainError(f"radius must be positive and finite, got {r!r}")
    a, b = profile.alpha, profile.beta
    if profile.family == SEXTIC:
        r2 = rr * rr
        p = 0.5 * a * r2 + 0.25 * b * r2 * r2
        p1 = a * rr + b * r2 * rr
        p2 = a + 3.0 * b * r2
    elif profile.family == MIXED:
        p = a * rr + 0.5 * b * rr * rr
        p1 = a + b * rr
        p2 = b * np.ones_like(rr)
    else:
        r2 = rr * rr
        inv2 = 1.0 / r2
        p = 0.5 * a * r2 + 0.5 * b * inv2
        p1 = a * rr - b * inv2 / rr
        p2 = a + 3.0 * b * inv2 * inv2
    if np.ndim(r) == 0:
        return float(p), float(p1), float(p2)
    return p, p1, p2
