"""As-published closed forms, kept solely for side-by-side auditing.

The recurrence rows and several downstream formulas for these potential
families circulate in print with three defects: the mixed-family A_n
lacks the alpha^2 term (dragging the printed energy and the printed
Coulomb restriction with it), the singular-family C_n lacks its overall
beta factor, and the sextic two-level energy expression is inconsistent
with the determinant it was derived from.  The functions here evaluate
those printed forms verbatim so the CLI can show, next to the corrected
values, exactly how far off they are — the arbiter is always the ODE
residual and the finite-difference spectrum, never either set of
formulas.
"""

import math

import numpy as np

from .ansatz import build_profile
from .errors import InvalidParameter
from .potentials import MIXED, SEXTIC, PotentialSpec, check_angular_momentum, validate
from .quantization import QesSolution, continuant
from .recurrence import RecurrenceRow, coeff_row, series_coefficients
from .rootfind import real_roots


def mixed_row(spec, profile, m, n, E):
    """Printed mixed rows: A_n = E + beta(1 + 2n + 2 delta), no alpha^2."""
    row = coeff_row(spec, profile, m, n, E)
    return RecurrenceRow(n, row.A - profile.alpha**2, row.B, row.C)


def singular_row(spec, profile, m, n, E):
    """Printed singular rows: C_n = (3 - 2 delta - 4n) - c, no beta factor."""
    row = coeff_row(spec, profile, m, n, E)
    return RecurrenceRow(n, row.A, row.B, (3.0 - 2.0 * profile.delta - 4.0 * n) - spec.c)


def sextic_energies(spec, m: int, p: int):
    """Printed sextic energies; only the p = 0 and p = 1 forms exist in print.

    The p = 1 expression E = b(2+m)/sqrt(c) +/- sqrt(b^2 (2+m)
    - 4c(1+m)(2 + 2 sqrt(c) (2+m)))/sqrt(c) frequently has a negative
    radicand; an empty list is returned in that case.
    """
    spec = validate(spec)
    m = check_angular_momentum(m)
    sc = math.sqrt(spec.c)
    if p == 0:
        return [spec.b * (1.0 + m) / sc]
    if p == 1:
        disc = spec.b**2 * (2.0 + m) - 4.0 * spec.c * (1.0 + m) * (2.0 + 2.0 * sc * (2.0 + m))
        if disc < 0.0:
            return []
        root = math.sqrt(disc) / sc
        base = spec.b * (2.0 + m) / sc
        return [base - root, base + root]
    raise InvalidParameter("p", p, "published sextic energies exist only for p <= 1")


def mixed_energy(spec, m: int, p: int) -> float:
    """Printed mixed energy 2 sqrt(b) (1+m+p), missing -a^2/(4b)."""
    spec = validate(spec)
    m = check_angular_momentum(m)
    return 2.0 * math.sqrt(spec.b) * (1.0 + m + p)


def mixed_coulomb_roots(a: float, b: float, m: int, p: int):
    """Printed mixed Coulomb restriction; only p = 0 and p = 1 exist in print."""
    m = check_angular_momentum(m)
    sb = math.sqrt(b)
    if p == 0:
        return [a * (1.0 + 2.0 * m) / (2.0 * sb)]
    if p == 1:
        u = (1.0 + 2.0 * m) * a / (2.0 * sb)
        v = (3.0 + 2.0 * m) * a / (2.0 * sb)
        # (c + u)(c + v) = 2 sqrt(b) (1 + 2m)
        poly = np.array([u * v - 2.0 * sb * (1.0 + 2.0 * m), u + v, 1.0])
        return list(real_roots(poly))
    raise InvalidParameter("p", p, "published mixed restriction exists only for p <= 1")


def published_solutions(spec: PotentialSpec, m: int, p: int):
    """Candidate solutions built from the printed formulas, for auditing.

    Residuals stored on the solutions are evaluated with the printed
    rows themselves; whether the candidates actually solve the radial
    equation is judged downstream by qes2d.oracle.
    """
    spec = validate(spec)
    m = check_angular_momentum(m)
    profile = build_profile(spec, m)
    if spec.family == SEXTIC:
        energies = sextic_energies(spec, m, p)
        row = coeff_row  # the printed sextic rows are the corrected ones
    elif spec.family == MIXED:
        energies = [mixed_energy(spec, m, p)]
        row = mixed_row
    else:
        # printed singular energy agrees with the corrected one
        from .quantization import singular_energy

        energies = [singular_energy(spec, m, p)]
        row = singular_row
    out = []
    for E in energies:
        coeffs = series_coefficients(spec, profile, m, p, E, row=row)
        rows = [row(spec, profile, m, n, E) for n in range(p + 1)]
        out.append(
            QesSolution(spec, m, p, float(E), coeffs, float(rows[p].A), float(continuant(rows, p)))
        )
    return out
