"""Polynomial root extraction via Durand-Kerner simultaneous iteration.

Coefficients are always ascending (c[0] + c[1] x + ...).  Degrees 1 and 2
are solved in closed form; higher degrees iterate all roots at once from
a deterministic circle of starting points, so repeated runs are
bit-identical.
"""

import cmath

import numpy as np

MAX_ITER = 128
CONVERGENCE = 1e-13
REAL_IMAG_TOL = 1e-8
CLUSTER_TOL = 1e-7


def durand_kerner(coeffs, max_iter=MAX_ITER, tol=CONVERGENCE):
    """All complex roots of the polynomial with ascending coefficients."""
    c = np.asarray(coeffs, dtype=float)
    # drop numerically-dead leading (highest-order) terms
    nz = np.nonzero(c)[0]
    if nz.size == 0:
        return np.empty(0, dtype=complex)
    c = c[: nz[-1] + 1]
    deg = len(c) - 1
    if deg == 0:
        return np.empty(0, dtype=complex)
    if deg == 1:
        return np.array([-c[0] / c[1]], dtype=complex)
    if deg == 2:
        c0, c1, c2 = c
        disc = cmath.sqrt(complex(c1 * c1 - 4.0 * c2 * c0))
        # pick the sign that avoids cancellation in -c1 -/+ disc
        q = -0.5 * (c1 + disc) if (c1.real * disc.real + 0.0) >= 0 else -0.5 * (c1 - disc)
        if q == 0:
            return np.zeros(2, dtype=complex)
        return np.array([q / c2, c0 / q], dtype=complex)

    monic = (c / c[-1]).astype(complex)
    radius = 1.0 + float(np.max(np.abs(monic[:-1])))
    k = np.arange(deg)
    z = radius * np.exp(2j * np.pi * (k + 0.25) / deg)
    for _ in range(max_iter):
        pz = np.polyval(monic[::-1], z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        denom = diff.prod(axis=1)
        step = pz / denom
        z = z - step
        if np.max(np.abs(step) / (1.0 + np.abs(z))) <= tol:
            break
    return z


def real_roots(coeffs, imag_tol=REAL_IMAG_TOL):
    """Sorted real roots: complex roots with |Im| < imag_tol*(1+|Re|) qualify."""
    roots = durand_kerner(coeffs)
    keep = np.abs(roots.imag) < imag_tol * (1.0 + np.abs(roots.real))
    return np.sort(roots.real[keep])


def cluster_real_roots(values, tol=CLUSTER_TOL):
    """Merge nearly-degenerate sorted roots into (value, multiplicity) pairs.

    Roots closer than tol*(1+|value|) collapse to their mean.
    """
    out = []
    for v in np.sort(np.asarray(values, dtype=float)):
        if out and abs(v - out[-1][0]) <= tol * (1.0 + abs(v)):
            prev, mult = out[-1]
            out[-1] = ((prev * mult + v) / (mult + 1), mult + 1)
        else:
            out.append((float(v), 1))
    return out
