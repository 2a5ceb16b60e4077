"""Three-term recurrence rows and truncated series coefficients.

Substituting the ansatz exp(p(r)) * sum_n a_n r^(n*step+delta) into the
reduced radial equation and collecting powers of r yields, for every
family, a relation

    A_n a_n + B_(n+1) a_(n+1) + C_(n+2) a_(n+2) = 0,

where the rows are

  sextic    A_n = alpha^2 + (3 + 2 delta + 4 n) beta - a
            B_n = E + (1 + 2 delta + 4 n) alpha
            C_n = (delta + 2n)(delta + 2n - 1) - (m^2 - 1/4)

  mixed     A_n = E + alpha^2 + beta (1 + 2 n + 2 delta)
            B_n = -c + 2 alpha (n + delta)
            C_n = (n + delta)(n + delta - 1) - (m^2 - 1/4)

  singular  A_n = E + alpha (1 + 2 delta + 4 n)
            B_n = -b - 2 alpha beta - (m^2 - 1/4) + (delta + 2n)(delta + 2n - 1)
            C_n = beta (3 - 2 delta - 4 n) - c

Two of the published rows for these families circulate in a form that
does not satisfy the equation (mixed A_n missing the alpha^2 term, and
the singular C_n missing the overall beta); the forms above are the ones
under which the reconstructed eigenfunction makes the ODE residual
vanish identically.  The as-published variants live in
qes2d.published for side-by-side auditing.

C_0 = 0 for every valid profile (this is the indicial condition fixing
delta), and the series truncates at order p exactly when A_p = 0.
"""

from dataclasses import dataclass

import numpy as np

from .ansatz import AnsatzProfile
from .errors import FamilyMismatch, SingularRecurrence
from .potentials import MIXED, SEXTIC, PotentialSpec, check_angular_momentum


@dataclass(frozen=True)
class RecurrenceRow:
    n: int
    A: float
    B: float
    C: float


@dataclass(frozen=True)
class SeriesCoefficients:
    """Truncated series a_0..a_p with the a_0 = 1 convention."""

    p: int
    values: tuple

    def __post_init__(self):
        assert len(self.values) == self.p + 1


def _check_pair(spec: PotentialSpec, profile: AnsatzProfile):
    if spec.family != profile.family:
        raise FamilyMismatch(f"spec family {spec.family!r} vs profile family {profile.family!r}")


def coeff_row(spec: PotentialSpec, profile: AnsatzProfile, m: int, n: int, E: float) -> RecurrenceRow:
    """The (A_n, B_n, C_n) triple for one series order n at trial energy E."""
    _check_pair(spec, profile)
    m = check_angular_momentum(m)
    al, be, de = profile.alpha, profile.beta, profile.delta
    cf = m * m - 0.25
    if spec.family == SEXTIC:
        A = al * al + (3.0 + 2.0 * de + 4.0 * n) * be - spec.a
        B = E + (1.0 + 2.0 * de + 4.0 * n) * al
        C = (de + 2.0 * n) * (de + 2.0 * n - 1.0) - cf
    elif spec.family == MIXED:
        A = E + al * al + be * (1.0 + 2.0 * n + 2.0 * de)
        B = -spec.c + 2.0 * al * (n + de)
        C = (n + de) * (n + de - 1.0) - cf
    else:
        A = E + al * (1.0 + 2.0 * de + 4.0 * n)
        B = -spec.b - 2.0 * al * be - cf + (de + 2.0 * n) * (de + 2.0 * n - 1.0)
        C = be * (3.0 - 2.0 * de - 4.0 * n) - spec.c
    return RecurrenceRow(n, float(A), float(B), float(C))


def series_coefficients(
    spec: PotentialSpec,
    profile: AnsatzProfile,
    m: int,
    p: int,
    E: float,
    row=coeff_row,
) -> SeriesCoefficients:
    """Forward-solve the recurrence for a_0..a_p with a_0 = 1.

    The relation at series order k-2 determines a_k:
    a_k = -(A_(k-2) a_(k-2) + B_(k-1) a_(k-1)) / C_k, with a_(-1) = 0.
    Raises SingularRecurrence if some C_k (1 <= k <= p) vanishes; for
    valid profiles C_k = k*step*(k*step + 2m) > 0 (sextic/mixed) or
    4*k*sqrt(d) > 0 (singular), so this only fires on malformed input.
    """
    if p < 0:
        raise ValueError("truncation order p must be nonnegative")
    rows = [row(spec, profile, m, n, E) for n in range(p + 1)]
    values = [1.0]
    for k in range(1, p + 1):
        Ck = rows[k].C
        if Ck == 0.0:
            raise SingularRecurrence(k)
        prev2 = rows[k - 2].A * values[k - 2] if k >= 2 else 0.0
        values.append(-(prev2 + rows[k - 1].B * values[k - 1]) / Ck)
    return SeriesCoefficients(p, tuple(values))


def termination_residual(
    spec: PotentialSpec, profile: AnsatzProfile, m: int, p: int, E: float, row=coeff_row
) -> float:
    """A_p; zero exactly when the series legitimately truncates at order p."""
    return row(spec, profile, m, p, E).A


def series_powers(profile: AnsatzProfile, p: int) -> np.ndarray:
    """Exponents k*step + delta of the series part, k = 0..p."""
    return profile.delta + profile.step * np.arange(p + 1, dtype=float)
