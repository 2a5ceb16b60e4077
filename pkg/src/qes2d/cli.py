"""Command-line front end: solve, constrain, verify, sample.

All numeric output uses 15 significant digits with lowercase scientific
notation, fixed key order and LF line endings, so identical invocations
produce byte-identical files.

Exit codes: 0 success, 1 usage error, 2 constraint violation,
3 verification failure.
"""

import argparse
import sys

import numpy as np

from . import published
from .errors import ConstraintViolated, NoRealRoots, NoSolution, QesError
from .oracle import Grid, cross_validate, default_grid, ode_residual
from .potentials import MIXED, SEXTIC, SINGULAR, Mixed, Sextic, SingularEvenPower, effective_potential
from .quantization import (
    QesSolution,
    mixed_coulomb_solve,
    sextic_constraint_solve,
    singular_b_solve,
    solve,
)
from .wavefunction import evaluate_radial, normalize

_FAMILIES = (SEXTIC, MIXED, SINGULAR)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONSTRAINT = 2
EXIT_VERIFY = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def format_number(x) -> str:
    """15 significant digits, lowercase exponent; non-finite becomes null."""
    if x is None:
        return "null"
    x = float(x)
    if not np.isfinite(x):
        return "null"
    if x == 0.0:
        return "0"
    return f"{x:.15g}"


def _json_value(value):
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json_value(v) for v in value) + "]"
    return format_number(value)


def emit_json(records, keys) -> str:
    lines = ["["]
    for i, record in enumerate(records):
        body = ", ".join(f'"{k}": {_json_value(record[k])}' for k in keys)
        comma = "," if i + 1 < len(records) else ""
        lines.append("  {" + body + "}" + comma)
    lines.append("]")
    return "\n".join(lines) + "\n"


def emit_csv(records, keys) -> str:
    def cell(value):
        if isinstance(value, (list, tuple)):
            return ";".join(format_number(v) for v in value)
        if isinstance(value, str):
            return value
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        return format_number(value)

    lines = [",".join(keys)]
    for record in records:
        lines.append(",".join(cell(record[k]) for k in keys))
    return "\n".join(lines) + "\n"


def _write(text: str, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _build_spec(args):
    need = {"sextic": ("a", "b", "c"), "mixed": ("a", "b", "c"), "singular": ("a", "b", "c", "d")}
    missing = [n for n in need[args.family] if getattr(args, n) is None]
    if missing:
        raise _UsageError(f"family {args.family} requires --" + " --".join(missing))
    if args.family == SEXTIC:
        return Sextic(args.a, args.b, args.c)
    if args.family == MIXED:
        return Mixed(args.a, args.b, args.c)
    return SingularEvenPower(args.a, args.b, args.c, args.d)


def _solution_record(spec, solution: QesSolution, with_norm=True):
    record = {
        "family": spec.family,
        "m": solution.m,
        "p": solution.p,
        "E": solution.energy,
        "coefficients": list(solution.coefficients.values),
        "normalization": None,
        "node_count": None,
        "termination_residual": solution.termination_residual,
        "determinant_residual": solution.determinant_residual,
        "multiplicity": solution.multiplicity,
    }
    if with_norm:
        state = normalize(solution)
        record["normalization"] = state.normalization
        record["node_count"] = state.node_count
    return record


_SOLVE_KEYS = (
    "family", "m", "p", "E", "coefficients", "normalization", "node_count",
    "termination_residual", "determinant_residual", "multiplicity",
)
_VERIFY_KEYS = _SOLVE_KEYS + ("fd_nearest", "fd_delta", "ode_residual", "verdict")
_CONSTRAIN_KEYS = ("family", "m", "p", "solve_for", "value")


def cmd_solve(args) -> int:
    spec = _build_spec(args)
    try:
        solutions = solve(spec, args.m, args.p)
    except ConstraintViolated as err:
        sys.stderr.write(
            f"constraint violated: {err}\nresidual: {format_number(err.residual)}\n"
            f"nearest admissible value: {format_number(err.nearest)}\n"
        )
        return EXIT_CONSTRAINT
    records = [_solution_record(spec, s) for s in solutions]
    emit = emit_json if args.format == "json" else emit_csv
    _write(emit(records, _SOLVE_KEYS), args.output)
    return EXIT_OK


def cmd_constrain(args) -> int:
    try:
        if args.family == SEXTIC:
            if args.solve_for not in ("a", "b", "c"):
                raise _UsageError("sextic constraint solves for one of a, b, c")
            known = {n: getattr(args, n) for n in ("a", "b", "c") if n != args.solve_for}
            if any(v is None for v in known.values()):
                raise _UsageError("sextic constraint requires the two remaining coefficients")
            values = [sextic_constraint_solve(args.m, args.p, **known)]
        elif args.family == MIXED:
            if args.solve_for != "c":
                raise _UsageError("mixed constraint solves for c")
            if args.a is None or args.b is None:
                raise _UsageError("mixed constraint requires --a and --b")
            values = mixed_coulomb_solve(args.a, args.b, args.m, args.p)
            _warn_mixed_published(args, values)
        else:
            if args.solve_for != "b":
                raise _UsageError("singular constraint solves for b")
            if any(getattr(args, n) is None for n in ("a", "c", "d")):
                raise _UsageError("singular constraint requires --a --c --d")
            values = singular_b_solve(args.a, args.c, args.d, args.m, args.p)
    except (NoSolution, NoRealRoots) as err:
        sys.stderr.write(f"no admissible value: {err}\n")
        return EXIT_CONSTRAINT
    records = [
        {"family": args.family, "m": args.m, "p": args.p, "solve_for": args.solve_for, "value": v}
        for v in values
    ]
    emit = emit_json if args.format == "json" else emit_csv
    _write(emit(records, _CONSTRAIN_KEYS), args.output)
    return EXIT_OK


def _warn_mixed_published(args, corrected_values):
    """One stderr line whenever the as-published restriction disagrees."""
    if args.p > 1:
        return
    printed = published.mixed_coulomb_roots(args.a, args.b, args.m, args.p)
    if all(any(abs(pv - cv) <= 1e-9 * (1.0 + abs(cv)) for cv in corrected_values) for pv in printed):
        return
    printed_res = []
    for pv in printed:
        sols = published.published_solutions(Mixed(args.a, args.b, pv), args.m, args.p)
        printed_res.append(max(ode_residual(s) for s in sols))
    corrected_res = []
    for cv in corrected_values:
        sols = solve(Mixed(args.a, args.b, cv), args.m, args.p)
        corrected_res.append(max(ode_residual(s) for s in sols))
    sys.stderr.write(
        "WARNING: as-published restriction gives c = "
        + ", ".join(format_number(v) for v in printed)
        + f" (ode residual up to {format_number(max(printed_res))}); "
        + "corrected determinant gives c = "
        + ", ".join(format_number(v) for v in corrected_values)
        + f" (ode residual up to {format_number(max(corrected_res))})\n"
    )


def _verify_specs(args):
    """Specs to audit; paper mode may fill the constrained coefficient."""
    if not args.use_paper_formulas:
        return [_build_spec(args)]
    if args.family == MIXED and args.c is None:
        roots = published.mixed_coulomb_roots(args.a, args.b, args.m, args.p)
        return [Mixed(args.a, args.b, c) for c in roots]
    if args.family == SINGULAR and args.b is None:
        roots = singular_b_solve(args.a, args.c, args.d, args.m, args.p)
        return [SingularEvenPower(args.a, b, args.c, args.d) for b in roots]
    return [_build_spec(args)]


def cmd_verify(args) -> int:
    grid_override = None
    if args.r_min is not None or args.r_max is not None or args.n_points is not None:
        base = default_grid(args.family)
        grid_override = Grid(
            args.r_min if args.r_min is not None else base.r_min,
            args.r_max if args.r_max is not None else base.r_max,
            args.n_points if args.n_points is not None else base.n_points,
        )
    try:
        specs = _verify_specs(args)
    except (NoSolution, NoRealRoots) as err:
        sys.stderr.write(f"no admissible value: {err}\n")
        return EXIT_CONSTRAINT

    records = []
    all_pass = True
    for spec in specs:
        if args.use_paper_formulas:
            solutions = published.published_solutions(spec, args.m, args.p)
            if not solutions:
                all_pass = False
                records.append(
                    {
                        "family": spec.family, "m": args.m, "p": args.p, "E": None,
                        "coefficients": [], "normalization": None, "node_count": None,
                        "termination_residual": None, "determinant_residual": None,
                        "multiplicity": 0, "fd_nearest": None, "fd_delta": None,
                        "ode_residual": None, "verdict": "FAIL",
                    }
                )
                continue
        else:
            try:
                solutions = solve(spec, args.m, args.p)
            except ConstraintViolated as err:
                sys.stderr.write(
                    f"constraint violated: {err}\nresidual: {format_number(err.residual)}\n"
                    f"nearest admissible value: {format_number(err.nearest)}\n"
                )
                return EXIT_CONSTRAINT
        for solution in solutions:
            grid = grid_override if grid_override is not None else default_grid(spec.family)
            report = cross_validate(solution, grid, k=args.k)
            match = report.matched[0]
            record = _solution_record(spec, solution, with_norm=not args.use_paper_formulas)
            record.update(
                {
                    "fd_nearest": match.oracle_value,
                    "fd_delta": match.delta,
                    "ode_residual": report.residual_max,
                    "verdict": match.verdict,
                }
            )
            records.append(record)
            all_pass = all_pass and report.passed
    emit = emit_json if args.format == "json" else emit_csv
    _write(emit(records, _VERIFY_KEYS), args.output)
    return EXIT_OK if all_pass else EXIT_VERIFY


def cmd_sample(args) -> int:
    spec = _build_spec(args)
    try:
        solutions = solve(spec, args.m, args.p)
    except ConstraintViolated as err:
        sys.stderr.write(f"constraint violated: {err}\n")
        return EXIT_CONSTRAINT
    if not (0 <= args.index < len(solutions)):
        raise _UsageError(f"--index {args.index} out of range; {len(solutions)} solution(s)")
    state = normalize(solutions[args.index])
    rs = np.linspace(args.r_min, args.r_max, args.rows)
    R, R1, _ = evaluate_radial(state.profile, state.coefficients, rs)
    R, R1 = state.normalization * R, state.normalization * R1
    veff = effective_potential(spec, args.m, rs)
    lines = ["r,R,Rprime,Veff"]
    for i in range(len(rs)):
        lines.append(
            f"{format_number(rs[i])},{format_number(R[i])},"
            f"{format_number(R1[i])},{format_number(veff[i])}"
        )
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _add_common(sub, with_d=True):
    sub.add_argument("--family", required=True, choices=_FAMILIES)
    sub.add_argument("--a", type=float)
    sub.add_argument("--b", type=float)
    sub.add_argument("--c", type=float)
    if with_d:
        sub.add_argument("--d", type=float)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--output", default=None, help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qes2d", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    p_solve = commands.add_parser("solve", help="closed-form solutions for one configuration")
    _add_common(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_con = commands.add_parser("constrain", help="solve the truncation/determinant restriction")
    _add_common(p_con)
    p_con.add_argument("--solve-for", required=True, choices=("a", "b", "c"))
    p_con.set_defaults(func=cmd_constrain)

    p_ver = commands.add_parser("verify", help="audit closed forms against the fd oracle")
    _add_common(p_ver)
    p_ver.add_argument("--r-min", type=float, default=None)
    p_ver.add_argument("--r-max", type=float, default=None)
    p_ver.add_argument("--n-points", type=int, default=None)
    p_ver.add_argument("--k", type=int, default=8, help="fd eigenvalues to compute")
    p_ver.add_argument(
        "--use-paper-formulas",
        action="store_true",
        help="audit the as-published closed forms instead of the corrected ones",
    )
    p_ver.set_defaults(func=cmd_verify)

    p_samp = commands.add_parser("sample", help="tabulate r, R, R', V_eff as CSV")
    _add_common(p_samp)
    p_samp.add_argument("--index", type=int, default=0, help="solution index, sorted by energy")
    p_samp.add_argument("--r-min", dest="r_min", type=float, default=0.01)
    p_samp.add_argument("--r-max", dest="r_max", type=float, default=4.0)
    p_samp.add_argument("--rows", type=int, default=400)
    p_samp.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as err:
        sys.stderr.write(f"usage error: {err}\n")
        return EXIT_USAGE
    except QesError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
