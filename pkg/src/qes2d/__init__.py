"""Closed-form bound states of the 2D radial Schrodinger equation.

Three central-potential families admit a finite block of
quasi-exactly-solvable eigenstates; this package constructs them
(ansatz, three-term recurrence, determinant quantization), evaluates
and normalizes the eigenfunctions, and independently verifies every
closed form with a finite-difference eigensolver.
"""

from .ansatz import AnsatzProfile, build_profile, prefactor_and_derivatives
from .errors import (
    ConstraintViolated,
    DomainError,
    FamilyMismatch,
    GridError,
    InvalidParameter,
    NoRealRoots,
    NoSolution,
    QesError,
    QuadratureFailure,
    SingularRecurrence,
)
from .oracle import Grid, OracleReport, cross_validate, default_grid, fd_spectrum, ode_residual, sturm_count
from .potentials import (
    Mixed,
    PotentialSpec,
    Sextic,
    SingularEvenPower,
    effective_potential,
    potential_value,
    validate,
)
from .quantization import (
    QesSolution,
    continuant,
    mixed_coulomb_solve,
    mixed_energy,
    sextic_constraint_solve,
    sextic_energies,
    singular_b_solve,
    singular_energy,
    solve,
)
from .recurrence import (
    RecurrenceRow,
    SeriesCoefficients,
    coeff_row,
    series_coefficients,
    termination_residual,
)
from .wavefunction import (
    RadialState,
    full_wavefunction,
    node_count,
    normalize,
    overlap,
    radial_derivatives,
    radial_value,
)

__version__ = "0.1.0"

__all__ = [
    "AnsatzProfile",
    "ConstraintViolated",
    "DomainError",
    "FamilyMismatch",
    "Grid",
    "GridError",
    "InvalidParameter",
    "Mixed",
    "NoRealRoots",
    "NoSolution",
    "OracleReport",
    "PotentialSpec",
    "QesError",
    "QesSolution",
    "QuadratureFailure",
    "RadialState",
    "RecurrenceRow",
    "SeriesCoefficients",
    "Sextic",
    "SingularEvenPower",
    "SingularRecurrence",
    "build_profile",
    "coeff_row",
    "continuant",
    "cross_validate",
    "default_grid",
    "effective_potential",
    "fd_spectrum",
    "full_wavefunction",
    "mixed_coulomb_solve",
    "mixed_energy",
    "node_count",
    "normalize",
    "ode_residual",
    "overlap",
    "potential_value",
    "prefactor_and_derivatives",
    "radial_derivatives",
    "radial_value",
    "sextic_constraint_solve",
    "sextic_energies",
    "series_coefficients",
    "singular_b_solve",
    "singular_energy",
    "solve",
    "sturm_count",
    "termination_residual",
    "validate",
]
