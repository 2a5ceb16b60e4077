"""Evaluation, normalization and diagnostics of the closed-form eigenfunctions.

A solution is the radial function

    R(r) = N * (sum_k a_k r^(k*step)) * r^delta * exp(p(r)),

with N > 0 fixed by the radial normalization integral(0,inf) R^2 dr = 1.
The 2pi from the angular integral is folded into N, so the full 2D
wavefunction carries an explicit (2 pi)^(-1/2):

    psi(r, phi) = (2 pi)^(-1/2) r^(-1/2) R(r) exp(+/- i m phi).

Derivatives are analytic (product/chain rule over the three factors),
which is what makes the ODE-residual check in qes2d.oracle sharp.
"""

import math
from dataclasses import dataclass

import numpy as np

from .ansatz import AnsatzProfile, build_profile, prefactor_and_derivatives
from .errors import DomainError, FamilyMismatch, InvalidParameter, QuadratureFailure
from .potentials import SINGULAR
from .quantization import QesSolution
from .recurrence import series_powers
from .rootfind import cluster_real_roots, real_roots

# exp(p) underflows past double range here; everything is flushed to 0
_DEAD_EXPONENT = -708.0
_TAIL_FRACTION = 1e-16
_LOCAL_QUAD_TOL = 1e-10


@dataclass(frozen=True)
class RadialState:
    """A normalized radial eigenfunction: integral(0,inf) (N R)^2 dr = 1."""

    solution: QesSolution
    profile: AnsatzProfile
    coefficients: tuple
    normalization: float
    node_count: int


def evaluate_radial(profile: AnsatzProfile, coefficients, r):
    """Unnormalized (R, R', R'') at r (scalar or array), analytic derivatives."""
    scalar = np.ndim(r) == 0
    rr = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(rr <= 0.0) or not np.all(np.isfinite(rr)):
        raise DomainError(f"radius must be positive and finite, got {r!r}")
    coeffs = np.asarray(coefficients, dtype=float)
    q = series_powers(profile, len(coeffs) - 1)
    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        p, p1, p2 = prefactor_and_derivatives(profile, rr)
        rq = rr[:, None] ** q[None, :]
        u = rq @ coeffs
        u1 = (rq / rr[:, None]) @ (coeffs * q)
        u2 = (rq / (rr * rr)[:, None]) @ (coeffs * q * (q - 1.0))
        ep = np.exp(p)
        R = ep * u
        R1 = ep * (u1 + p1 * u)
        R2 = ep * (u2 + 2.0 * p1 * u1 + (p2 + p1 * p1) * u)
        dead = p < _DEAD_EXPONENT
        if np.any(dead):
            R = np.where(dead, 0.0, R)
            R1 = np.where(dead, 0.0, R1)
            R2 = np.where(dead, 0.0, R2)
    if scalar:
        return float(R[0]), float(R1[0]), float(R2[0])
    return R, R1, R2


def _series_value(profile, coeffs, rr):
    """R without derivatives, for quadrature inner loops; rr positive array."""
    q = series_powers(profile, len(coeffs) - 1)
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        p, _, _ = prefactor_and_derivatives(profile, rr)
        R = np.exp(p) * (rr[:, None] ** q[None, :] @ coeffs)
        return np.where(p < _DEAD_EXPONENT, 0.0, R)


def radial_value(state: RadialState, r):
    """N * R(r); underflows gracefully to 0 at both ends of the domain."""
    R, _, _ = evaluate_radial(state.profile, state.coefficients, r)
    return state.normalization * R


def radial_derivatives(state: RadialState, r):
    """(R, R', R'') of the normalized state."""
    R, R1, R2 = evaluate_radial(state.profile, state.coefficients, r)
    N = state.normalization
    return N * R, N * R1, N * R2


def node_count(solution: QesSolution) -> int:
    """Distinct positive real roots of the polynomial factor in x = r^step."""
    coeffs = np.asarray(solution.coefficients.values, dtype=float)
    if len(coeffs) == 1:
        return 0
    roots = real_roots(coeffs)
    clusters = cluster_real_roots(roots, tol=1e-9)
    return sum(1 for value, _ in clusters if value > 1e-12)


def adaptive_simpson(f, a, b, eps, max_evals=400_000):
    """Adaptive Simpson quadrature with interval bisection.

    eps is the total absolute error budget; each bisection halves the
    local budget.  Raises QuadratureFailure when the evaluation budget
    or recursion depth is exhausted before convergence.
    """
    budget = [max_evals]

    def ff(x):
        budget[0] -= 1
        if budget[0] < 0:
            raise QuadratureFailure(f"quadrature budget of {max_evals} evaluations exhausted")
        return f(x)

    def refine(x0, x1, x2, f0, f1, f2, whole, tol, depth):
        if depth <= 0:
            raise QuadratureFailure("adaptive Simpson recursion depth exhausted")
        xl, xr = 0.5 * (x0 + x1), 0.5 * (x1 + x2)
        fl, fr = ff(xl), ff(xr)
        left = (x1 - x0) * (f0 + 4.0 * fl + f1) / 6.0
        right = (x2 - x1) * (f1 + 4.0 * fr + f2) / 6.0
        if abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return refine(x0, xl, x1, f0, fl, f1, left, 0.5 * tol, depth - 1) + refine(
            x1, xr, x2, f1, fr, f2, right, 0.5 * tol, depth - 1
        )

    total = 0.0
    seeds = np.linspace(a, b, 17)
    fs = [ff(x) for x in seeds]
    for i in range(16):
        x0, x2 = seeds[i], seeds[i + 1]
        x1 = 0.5 * (x0 + x2)
        f0, f2 = fs[i], fs[i + 1]
        f1 = ff(x1)
        whole = (x2 - x0) * (f0 + 4.0 * f1 + f2) / 6.0
        total += refine(x0, x1, x2, f0, f1, f2, whole, eps / 16.0, 48)
    return total


def _integration_window(profile, coeffs):
    """[lo, hi] outside which R^2 is below _TAIL_FRACTION of its peak.

    For the singular family the lower cut sits where exp(beta/r^2) has
    fallen below 1e-300, so nothing representable is discarded.
    """
    if profile.family == SINGULAR:
        lo = math.sqrt(-profile.beta / 690.0)
    else:
        lo = 0.0
    hi = max(4.0, 2.0 * lo)

    def density(rr):
        R = _series_value(profile, coeffs, rr)
        return R * R

    for _ in range(200):
        scan = np.geomspace(max(lo, 1e-4), hi, 256)
        vals = density(scan)
        peak = float(vals.max())
        if peak > 0.0 and float(density(np.array([hi]))[0]) <= _TAIL_FRACTION * peak:
            break
        hi *= 1.3
    else:
        raise QuadratureFailure("could not locate a decaying integration window")
    scan = np.geomspace(max(lo, 1e-4), hi, 512)
    coarse = float(np.trapezoid(density(scan), scan))
    return lo, hi, coarse


def normalize(solution: QesSolution) -> RadialState:
    """Normalization constant via adaptive quadrature of integral R^2 dr.

    The stored coefficients keep the leading one positive (overall phase
    convention), so rescaling the raw series leaves the state unchanged.
    """
    profile = build_profile(solution.spec, solution.m)
    raw = np.asarray(solution.coefficients.values, dtype=float)
    sign = -1.0 if raw[0] < 0 else 1.0
    coeffs = sign * raw
    lo, hi, coarse = _integration_window(profile, coeffs)

    def integrand(x):
        if x <= max(lo, 0.0):
            return 0.0
        R = _series_value(profile, coeffs, np.array([x]))[0]
        return R * R

    integral = adaptive_simpson(integrand, lo, hi, _LOCAL_QUAD_TOL * max(coarse, 1e-12))
    if not (integral > 0.0 and np.isfinite(integral)):
        raise QuadratureFailure(f"norm integral evaluated to {integral!r}")
    return RadialState(
        solution=solution,
        profile=profile,
        coefficients=tuple(float(v) for v in coeffs),
        normalization=float(1.0 / math.sqrt(integral)),
        node_count=node_count(solution),
    )


def overlap(state_a: RadialState, state_b: RadialState) -> float:
    """integral(0,inf) R_a R_b dr for two normalized states of one family."""
    if state_a.profile.family != state_b.profile.family:
        raise FamilyMismatch("overlap requires states of the same potential family")
    ca = np.asarray(state_a.coefficients)
    cb = np.asarray(state_b.coefficients)
    lo_a, hi_a, coarse_a = _integration_window(state_a.profile, ca)
    lo_b, hi_b, coarse_b = _integration_window(state_b.profile, cb)
    lo, hi = min(lo_a, lo_b), max(hi_a, hi_b)
    NN = state_a.normalization * state_b.normalization

    def integrand(x):
        if x <= max(lo, 0.0):
            return 0.0
        xx = np.array([x])
        Ra = _series_value(state_a.profile, ca, xx)[0]
        Rb = _series_value(state_b.profile, cb, xx)[0]
        return NN * Ra * Rb

    eps = _LOCAL_QUAD_TOL * max(1.0, NN * math.sqrt(coarse_a * coarse_b)) * 0.01
    return adaptive_simpson(integrand, lo, hi, eps)


def full_wavefunction(state: RadialState, r, phi: float, sign: int = 1) -> complex:
    """psi(r, phi) = (2 pi)^(-1/2) r^(-1/2) R(r) exp(sign * i m phi)."""
    if sign not in (1, -1):
        raise InvalidParameter("sign", sign, "angular phase sign must be +1 or -1")
    R = radial_value(state, r)
    m = state.solution.m
    return R / np.sqrt(2.0 * np.pi * r) * np.exp(1j * sign * m * phi)
