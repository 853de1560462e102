"""Command-line interface.

Subcommands:

* ``bound``   -- variational upper bound for one level (A minimized or fixed)
* ``exact``   -- closed-form eigenpairs of the order-n coupled family
* ``perturb`` -- first-order perturbation coefficient of lambda
* ``table``   -- recompute a published reference table and emit CSV
* ``oracle``  -- shooting eigenvalue next to the variational bound

Exit codes: 0 success, 2 invalid flags, 3 numerical failure, 4 a table row
outside its comparison tolerance.
"""

from __future__ import annotations

import argparse
import sys
import time

from .errors import ConvergenceError, DomainError
from .exact_solutions import exact_spectrum
from .model import ChannelSpec, PotentialParams
from .oracle import ShootingConfig, shoot_eigenvalue
from .perturbation import first_order_coefficient
from .records import RunRecord
from .tables import run_table, table_csv_lines
from .variational import bound_at_A, minimize_over_A

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_TOLERANCE = 4


def _add_channel_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--gamma", type=float, default=None,
                        help="combined angular/dimension parameter (>= -1)")
    parser.add_argument("--N", type=int, default=None, help="space dimension (>= 1)")
    parser.add_argument("--l", type=int, default=None, help="angular momentum (>= 0)")


def _resolve_gamma(args) -> float:
    if args.gamma is not None:
        if args.N is not None or args.l is not None:
            raise DomainError("give either --gamma or the pair --N --l, not both")
        return args.gamma
    if args.N is None or args.l is None:
        raise DomainError("channel unspecified: need --gamma or both --N and --l")
    return ChannelSpec.from_dimension(args.N, args.l).gamma


def _channel_notes(gamma: float) -> list:
    channel = ChannelSpec(gamma=gamma)
    notes = []
    if channel.attractive_singular:
        notes.append(
            "gamma below -1/2: attractive-singularity regime; bounds computed "
            "as usual but flagged"
        )
    return notes


def _emit(record: RunRecord, fmt: str, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        print(record.to_json(), file=stream)
    elif fmt == "csv":
        for line in record.csv_lines():
            print(line, file=stream)
    else:
        for line in record.text_lines():
            print(line, file=stream)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="npo",
        description=(
            "Bounds, exact solutions, and perturbation data for the "
            "oscillator with potential B r^2 + lambda r^2/(1 + g r^2)"
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_bound = sub.add_parser("bound", help="variational upper bound for one level")
    _add_channel_flags(p_bound)
    p_bound.add_argument("--lambda", dest="lam", type=float, required=True)
    p_bound.add_argument("--g", type=float, required=True)
    p_bound.add_argument("--B", type=float, default=1.0)
    p_bound.add_argument("--level", type=int, default=0)
    p_bound.add_argument("--D", type=int, default=20, help="basis size")
    p_bound.add_argument("--amax", type=float, default=10.0,
                         help="upper end of the A search box")
    p_bound.add_argument("--fix-A", dest="fix_A", type=float, default=None,
                         help="evaluate at this A instead of minimizing")
    p_bound.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p_exact = sub.add_parser("exact", help="closed-form eigenpairs of order n")
    p_exact.add_argument("--n", type=int, required=True)
    p_exact.add_argument("--gamma", type=float, required=True)
    p_exact.add_argument("--g", type=float, required=True)
    p_exact.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p_pert = sub.add_parser("perturb", help="first-order coefficient of lambda")
    _add_channel_flags(p_pert)
    p_pert.add_argument("--n", type=int, required=True)
    p_pert.add_argument("--g", type=float, required=True)
    p_pert.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p_table = sub.add_parser("table", help="recompute a published reference table")
    p_table.add_argument("--table", type=int, choices=(1, 2, 3, 4, 5), required=True)
    p_table.add_argument("--out", type=str, default=None,
                         help="write CSV here instead of stdout")

    p_oracle = sub.add_parser("oracle", help="shooting eigenvalue vs variational bound")
    _add_channel_flags(p_oracle)
    p_oracle.add_argument("--lambda", dest="lam", type=float, required=True)
    p_oracle.add_argument("--g", type=float, required=True)
    p_oracle.add_argument("--level", type=int, default=0)
    p_oracle.add_argument("--D", type=int, default=20)
    p_oracle.add_argument("--format", choices=("json", "csv", "text"), default="text")

    return parser


def cmd_bound(args) -> int:
    t0 = time.perf_counter()
    gamma = _resolve_gamma(args)
    potential = PotentialParams(lam=args.lam, g=args.g)
    notes = _channel_notes(gamma)
    if args.fix_A is not None:
        energy = bound_at_A(args.level, args.D, args.fix_A, gamma, potential, args.B)
        optimal_A = args.fix_A
        history = [
            (d, bound_at_A(args.level, d, args.fix_A, gamma, potential, args.B))
            for d in range(args.level + 1, args.D + 1)
        ]
        notes.append("A fixed by flag; no minimization performed")
    else:
        result = minimize_over_A(
            args.level, args.D, gamma, potential, args.B, A_max=args.amax
        )
        energy, optimal_A, history = result.energy, result.optimal_A, result.history
    record = RunRecord(
        command="bound",
        params={
            "gamma": gamma, "lambda": args.lam, "g": args.g, "B": args.B,
            "level": args.level, "D": args.D, "amax": args.amax,
            "fix_A": args.fix_A,
        },
        results={"bound": energy},
        optimal_A=optimal_A,
        D=args.D,
        history=history,
        wall_time_s=time.perf_counter() - t0,
        notes=notes,
    )
    _emit(record, args.format)
    return EXIT_OK


def cmd_exact(args) -> int:
    t0 = time.perf_counter()
    solutions = exact_spectrum(args.n, args.gamma, args.g)
    results = {}
    for i, sol in enumerate(solutions):
        results[f"E_{i}"] = sol.energy
        results[f"lambda_{i}"] = sol.lam
        results[f"nodes_{i}"] = sol.nodes
        results[f"alphas_{i}"] = list(sol.alphas)
    record = RunRecord(
        command="exact",
        params={"n": args.n, "gamma": args.gamma, "g": args.g},
        results=results,
        wall_time_s=time.perf_counter() - t0,
        notes=[sol.level_label for sol in solutions],
    )
    _emit(record, args.format)
    return EXIT_OK


def cmd_perturb(args) -> int:
    t0 = time.perf_counter()
    gamma = _resolve_gamma(args)
    channel = ChannelSpec(gamma=gamma)
    coefficient = first_order_coefficient(args.n, channel, args.g)
    unperturbed = 2.0 * (2 * args.n + channel.zeta)
    record = RunRecord(
        command="perturb",
        params={"n": args.n, "gamma": gamma, "g": args.g},
        results={"coefficient": coefficient, "unperturbed": unperturbed},
        wall_time_s=time.perf_counter() - t0,
        notes=_channel_notes(gamma),
    )
    _emit(record, args.format)
    return EXIT_OK


def cmd_table(args) -> int:
    rows = run_table(args.table)
    lines = table_csv_lines(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)
    failing = [row for row in rows if not row.passed]
    if failing:
        for row in failing:
            print(
                f"row {row.params}: |diff| = {row.abs_diff:.3e} exceeds "
                f"{row.tolerance:.3e} [{row.status}] {row.note}",
                file=sys.stderr,
            )
        return EXIT_TOLERANCE
    return EXIT_OK


def cmd_oracle(args) -> int:
    t0 = time.perf_counter()
    gamma = _resolve_gamma(args)
    potential = PotentialParams(lam=args.lam, g=args.g)
    shot = shoot_eigenvalue(args.level, gamma, potential, ShootingConfig())
    result = minimize_over_A(args.level, args.D, gamma, potential, with_history=False)
    record = RunRecord(
        command="oracle",
        params={"gamma": gamma, "lambda": args.lam, "g": args.g,
                "level": args.level, "D": args.D},
        results={
            "shooting": shot,
            "bound": result.energy,
            "bound_minus_shooting": result.energy - shot,
        },
        optimal_A=result.optimal_A,
        D=args.D,
        wall_time_s=time.perf_counter() - t0,
        notes=_channel_notes(gamma),
    )
    _emit(record, args.format)
    return EXIT_OK


_DISPATCH = {
    "bound": cmd_bound,
    "exact": cmd_exact,
    "perturb": cmd_perturb,
    "table": cmd_table,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed the usage message
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _DISPATCH[args.subcommand](args)
    except (DomainError, ConvergenceError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL if not isinstance(exc, DomainError) else EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
