"""Determinant quantization: energies and constrained potential parameters.

A nontrivial truncated coefficient vector (a_0..a_p) requires the
(p+1)x(p+1) tridiagonal determinant with diagonal B_0..B_p,
superdiagonal C_1..C_p and subdiagonal A_0..A_(p-1) to vanish.  The
determinant is evaluated as a continuant,

    D_(-1) = 1,  D_0 = B_0,  D_k = B_k D_(k-1) - A_(k-1) C_k D_(k-2),

run either on numbers or on dense polynomial coefficients when one row
entry is affine in the unknown:

  * sextic: B_n is affine in E, so D_p(E) is a degree-(p+1) polynomial
    whose real roots are the quasi-exact energies (the truncation
    condition A_p = 0 restricts the potential parameters, not E);
  * mixed: A_p = 0 fixes E = 2 sqrt(b) (1+m+p) - a^2/(4b), and B_n is
    affine in the Coulomb coefficient c, so D_p(c) = 0 selects the
    admissible c values;
  * singular: A_p = 0 fixes E = sqrt(a) (4+4p+2mu), and B_n is affine
    in the inverse-square coefficient b.

Roots are extracted with the deterministic Durand-Kerner iteration from
qes2d.rootfind; nearly-degenerate roots merge into one value with a
multiplicity flag.
"""

import dataclasses
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .ansatz import AnsatzProfile, build_profile
from .errors import ConstraintViolated, InvalidParameter, NoRealRoots, NoSolution
from .potentials import (
    MIXED,
    SEXTIC,
    Mixed,
    PotentialSpec,
    SingularEvenPower,
    check_angular_momentum,
    validate,
)
from .recurrence import (
    RecurrenceRow,
    SeriesCoefficients,
    coeff_row,
    series_coefficients,
    termination_residual,
)
from .rootfind import CLUSTER_TOL, cluster_real_roots, real_roots

TERMINATION_TOL = 1e-9
DETERMINANT_TOL = 1e-9


@dataclass(frozen=True)
class QesSolution:
    spec: PotentialSpec
    m: int
    p: int
    energy: float
    coefficients: SeriesCoefficients
    termination_residual: float
    determinant_residual: float
    multiplicity: int = 1


def continuant(rows: Sequence[RecurrenceRow], p: int) -> float:
    """D_p from the two-term continuant recursion over rows 0..p."""
    d_prev2, d_prev1 = 1.0, rows[0].B
    for k in range(1, p + 1):
        d_prev2, d_prev1 = d_prev1, rows[k].B * d_prev1 - rows[k - 1].A * rows[k].C * d_prev2
    return d_prev1


def continuant_scale(rows: Sequence[RecurrenceRow], p: int) -> float:
    """prod_k max(1, |B_k|): the natural magnitude of D_p for residual scaling."""
    scale = 1.0
    for k in range(p + 1):
        scale *= max(1.0, abs(rows[k].B))
    return scale


def _poly_continuant(A, B_polys, C, p):
    """Continuant where each B_k is an ascending-coefficient polynomial."""
    d_prev2 = np.array([1.0])
    d_prev1 = np.asarray(B_polys[0], dtype=float)
    for k in range(1, p + 1):
        d = np.convolve(np.asarray(B_polys[k], dtype=float), d_prev1)
        corr = A[k - 1] * C[k] * d_prev2
        if len(corr) > len(d):
            d = np.pad(d, (0, len(corr) - len(d)))
        d[: len(corr)] -= corr
        d_prev2, d_prev1 = d_prev1, d
    return d_prev1


def _check_order(p) -> int:
    if not isinstance(p, (int, np.integer)) or isinstance(p, bool) or p < 0:
        raise InvalidParameter("p", p, "truncation order must be a nonnegative integer")
    return int(p)


def _sextic_termination_check(spec, profile, m, p, tol):
    res = termination_residual(spec, profile, m, p, 0.0)
    factor = (3.0 + 2.0 * profile.delta + 4.0 * p) * profile.beta
    scale = max(1.0, abs(spec.a), profile.alpha**2, abs(factor))
    if abs(res) > tol * scale:
        raise ConstraintViolated(
            res,
            spec.a + res,
            f"sextic truncation condition violated: A_{p} = {res:.6g}; "
            f"nearest admissible a = {spec.a + res:.15g}",
        )
    return res


def _sextic_energy_clusters(spec, m, p, termination_tol=TERMINATION_TOL):
    spec = validate(spec)
    m = check_angular_momentum(m)
    p = _check_order(p)
    profile = build_profile(spec, m)
    _sextic_termination_check(spec, profile, m, p, termination_tol)
    rows0 = [coeff_row(spec, profile, m, n, 0.0) for n in range(p + 1)]
    b_polys = [np.array([row.B, 1.0]) for row in rows0]
    poly = _poly_continuant([r.A for r in rows0], b_polys, [r.C for r in rows0], p)
    roots = real_roots(poly)
    if roots.size == 0:
        raise NoRealRoots(f"determinant polynomial of degree {p + 1} has no real roots")
    return cluster_real_roots(roots)


def sextic_energies(spec, m: int, p: int):
    """Sorted real roots of D_p(E) for a sextic spec satisfying A_p = 0."""
    return [value for value, _ in _sextic_energy_clusters(spec, m, p)]


def sextic_constraint_solve(m: int, p: int, a: Optional[float] = None,
                            b: Optional[float] = None, c: Optional[float] = None) -> float:
    """Solve a + 2 sqrt(c) (2+m+2p) - b^2/(4c) = 0 for whichever of a, b, c is None.

    For the missing b the nonnegative root is returned (the condition
    only constrains b^2).  Solving for c uses geometric bisection of the
    strictly increasing g(c) = a + 2 sqrt(c) K - b^2/(4c), then Newton
    polish; NoSolution if no bracket exists.
    """
    m = check_angular_momentum(m)
    p = _check_order(p)
    missing = [name for name, v in (("a", a), ("b", b), ("c", c)) if v is None]
    if len(missing) != 1:
        raise InvalidParameter("known", missing, "exactly two of a, b, c must be given")
    K = 2.0 + m + 2.0 * p
    if missing[0] == "a":
        if c is None or c <= 0:
            raise InvalidParameter("c", c, "solving for a requires c > 0")
        return b * b / (4.0 * c) - 2.0 * np.sqrt(c) * K
    if missing[0] == "b":
        if c is None or c <= 0:
            raise InvalidParameter("c", c, "solving for b requires c > 0")
        b_sq = 4.0 * c * (a + 2.0 * np.sqrt(c) * K)
        if b_sq < 0:
            raise NoSolution(f"b^2 = {b_sq:.6g} has no real solution")
        return float(np.sqrt(b_sq))

    def g(cc):
        return a + 2.0 * np.sqrt(cc) * K - b * b / (4.0 * cc)

    lo = hi = 1.0
    for _ in range(1200):
        if g(lo) < 0.0:
            break
        lo /= 4.0
        if lo < 1e-300:
            raise NoSolution("cannot bracket c from below")
    for _ in range(1200):
        if g(hi) > 0.0:
            break
        hi *= 4.0
        if hi > 1e300:
            raise NoSolution("cannot bracket c from above")
    for _ in range(200):
        mid = np.sqrt(lo * hi)
        if g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * hi:
            break
    cc = 0.5 * (lo + hi)
    for _ in range(4):
        slope = K / np.sqrt(cc) + b * b / (4.0 * cc * cc)
        cc -= g(cc) / slope
    return float(cc)


def mixed_energy(spec: Mixed, m: int, p: int) -> float:
    """E_p = 2 sqrt(b) (1+m+p) - a^2/(4b), the unique energy with A_p = 0."""
    spec = validate(spec)
    m = check_angular_momentum(m)
    p = _check_order(p)
    return 2.0 * np.sqrt(spec.b) * (1.0 + m + p) - spec.a * spec.a / (4.0 * spec.b)


def _parameter_clusters(spec0, m, p, energy):
    """Root clusters of D_p(x) where B_n = -x + (B_n at x = 0)."""
    profile = build_profile(spec0, m)
    rows0 = [coeff_row(spec0, profile, m, n, energy) for n in range(p + 1)]
    b_polys = [np.array([row.B, -1.0]) for row in rows0]
    poly = _poly_continuant([r.A for r in rows0], b_polys, [r.C for r in rows0], p)
    roots = real_roots(poly)
    if roots.size == 0:
        raise NoRealRoots(f"determinant polynomial of degree {p + 1} has no real roots")
    return cluster_real_roots(roots)


def mixed_coulomb_solve(a: float, b: float, m: int, p: int):
    """Sorted admissible Coulomb coefficients: real roots of D_p(c) at E = E_p."""
    spec0 = Mixed(float(a), float(b), 0.0)
    energy = mixed_energy(spec0, m, p)
    return [v for v, _ in _parameter_clusters(spec0, m, p, energy)]


def singular_energy(spec: SingularEvenPower, m: int, p: int) -> float:
    """E_p = sqrt(a) (4 + 4p + 2 mu) with mu = c/(2 sqrt(d))."""
    spec = validate(spec)
    m = check_angular_momentum(m)
    p = _check_order(p)
    mu = spec.c / (2.0 * np.sqrt(spec.d))
    return float(np.sqrt(spec.a) * (4.0 + 4.0 * p + 2.0 * mu))


def singular_b_solve(a: float, c: float, d: float, m: int, p: int):
    """Sorted admissible inverse-square coefficients: real roots of D_p(b) at E = E_p."""
    spec0 = SingularEvenPower(float(a), 0.0, float(c), float(d))
    energy = singular_energy(spec0, m, p)
    return [v for v, _ in _parameter_clusters(spec0, m, p, energy)]


def _build_solution(spec, profile, m, p, energy, multiplicity):
    coeffs = series_coefficients(spec, profile, m, p, energy)
    rows = [coeff_row(spec, profile, m, n, energy) for n in range(p + 1)]
    det = continuant(rows, p)
    term = termination_residual(spec, profile, m, p, energy)
    return QesSolution(spec, m, p, float(energy), coeffs, float(term), float(det), multiplicity)


def _nearest_cluster(clusters, value):
    best = min(clusters, key=lambda pair: abs(pair[0] - value))
    mult = best[1] if abs(best[0] - value) <= CLUSTER_TOL * (1.0 + abs(best[0])) else 1
    return best[0], mult


def solve(spec: PotentialSpec, m: int, p: int, *,
          termination_tol: float = TERMINATION_TOL,
          determinant_tol: float = DETERMINANT_TOL):
    """All quasi-exact solutions of a validated spec at (m, p), sorted by energy.

    Sextic: checks the truncation restriction on (a, b, c), then returns
    one solution per real determinant root.  Mixed/singular: the energy
    is fixed by A_p = 0; the given c (mixed) or b (singular) must sit on
    an admissible determinant root, otherwise ConstraintViolated reports
    the residual and the nearest admissible value.
    """
    spec = validate(spec)
    m = check_angular_momentum(m)
    p = _check_order(p)
    profile = build_profile(spec, m)

    if spec.family == SEXTIC:
        clusters = _sextic_energy_clusters(spec, m, p, termination_tol)
        solutions = [_build_solution(spec, profile, m, p, e, mult) for e, mult in clusters]
        return sorted(solutions, key=lambda s: s.energy)

    if spec.family == MIXED:
        energy = mixed_energy(spec, m, p)
        spec0 = dataclasses.replace(spec, c=0.0)
        clusters = _parameter_clusters(spec0, m, p, energy)
        given = spec.c
        param = "c"
    else:
        energy = singular_energy(spec, m, p)
        spec0 = dataclasses.replace(spec, b=0.0)
        clusters = _parameter_clusters(spec0, m, p, energy)
        given = spec.b
        param = "b"

    rows = [coeff_row(spec, profile, m, n, energy) for n in range(p + 1)]
    det = continuant(rows, p)
    scale = continuant_scale(rows, p)
    nearest, mult = _nearest_cluster(clusters, given)
    if abs(det) > determinant_tol * scale:
        raise ConstraintViolated(
            det,
            nearest,
            f"{spec.family} determinant condition violated at {param} = {given:.15g}: "
            f"D_{p} = {det:.6g}; nearest admissible {param} = {nearest:.15g}",
        )
    return [_build_solution(spec, profile, m, p, energy, mult)]
