"""Command-line front end: energy sweeps and wavefunction dumps.

Sweep mode (default) writes one record per grid energy as CSV
(header ``E,R,T,region,flags``) or JSON to stdout; the ``wavefunction``
subcommand writes ``x,phi_re,phi_im,density,current`` rows.  All
diagnostics go to stderr.  Floats are printed with 12 significant digits
in lowercase scientific notation, so identical flags give byte-identical
output.

Exit codes: 0 ok, 2 usage error, 3 oracle/strict failure, 4 numerical
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .barriers import Barrier, ScatteringConfig, classify_region
from .coefficients import coefficients_for
from .errors import (
    ConvergenceError,
    DomainError,
    MatchingError,
    SingularEnergyError,
)
from .ode_oracle import compare_closed_form
from .wavefunctions import current, lw_wave, tanh_wave

_EXIT_OK = 0
_EXIT_USAGE = 2
_EXIT_CHECK = 3
_EXIT_NUMERICAL = 4


@dataclass(frozen=True)
class SweepRecord:
    """One energy grid point of a sweep."""

    E: float
    R: float | None
    T: float | None
    region: str
    flags: str


def _fmt(v: float) -> str:
    return f"{v:.11e}"


def _round12(v: float) -> float:
    return float(_fmt(v))


def _barrier_arg(s: str) -> Barrier:
    try:
        return Barrier(s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown barrier {s!r} (choose from step, tanh, lambertw)"
        )


def _add_physics_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--barrier", type=_barrier_arg, required=True,
                        help="step | tanh | lambertw")
    parser.add_argument("--V0", type=float, default=3.0, help="barrier height")
    parser.add_argument("--m", type=float, default=1.0, help="particle mass")
    parser.add_argument("--b", type=float, default=0.5, help="tanh smoothness")
    parser.add_argument("--sigma", type=float, default=0.15,
                        help="Lambert-W smoothness")


def _sweep_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kgscatter",
        description="Reflection/transmission sweep over an energy grid.",
    )
    _add_physics_flags(p)
    p.add_argument("--emin", type=float, default=1.05)
    p.add_argument("--emax", type=float, default=6.0)
    p.add_argument("--steps", type=int, default=200, help="number of grid points")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check every point by direct integration")
    p.add_argument("--tol", type=float, default=1e-4,
                   help="oracle comparison tolerance")
    p.add_argument("--strict", action="store_true",
                   help="treat singular grid points as failures (exit 3)")
    return p


def _wavefunction_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kgscatter wavefunction",
        description="Dump the exact wavefunction of a smooth barrier.",
    )
    _add_physics_flags(p)
    p.add_argument("--E", type=float, default=5.0, help="particle energy")
    p.add_argument("--xmin", type=float, default=-10.0)
    p.add_argument("--xmax", type=float, default=10.0)
    p.add_argument("--points", type=int, default=100)
    p.add_argument("--c1", type=complex, default=1 + 0j,
                   help="coefficient of the first branch, e.g. '1+0j'")
    p.add_argument("--c2", type=complex, default=0j,
                   help="coefficient of the second branch")
    return p


def sweep_records(args) -> tuple[list[SweepRecord], bool]:
    """Compute all sweep rows; returns (records, any_oracle_failure)."""
    grid = np.linspace(args.emin, args.emax, args.steps)
    records: list[SweepRecord] = []
    oracle_failed = False
    for E in grid:
        E = float(E)
        cfg = ScatteringConfig(
            E=E, barrier=args.barrier, m=args.m, V0=args.V0, b=args.b,
            sigma=args.sigma,
        )
        region = classify_region(E, args.m, args.V0).value
        try:
            if args.oracle:
                report = compare_closed_form(cfg, tol=args.tol)
                if report.status == "skipped: singular":
                    records.append(SweepRecord(E, None, None, region, "singular"))
                    continue
                if not report.passed:
                    oracle_failed = True
                    print(
                        f"oracle mismatch at E={_fmt(E)}: closed R={_fmt(report.closed[0])}"
                        f" vs oracle R={_fmt(report.oracle.R)}"
                        f" (|dev|={report.abs_dev:.3e} > tol={args.tol:.1e})",
                        file=sys.stderr,
                    )
                rt = report.closed
                records.append(
                    SweepRecord(E, rt[0], rt[1], region, "oracle-checked")
                )
            else:
                rt = coefficients_for(cfg)
                records.append(SweepRecord(E, rt.R, rt.T, region, ""))
        except SingularEnergyError:
            records.append(SweepRecord(E, None, None, region, "singular"))
    return records, oracle_failed


def _emit_sweep(records: list[SweepRecord], fmt: str, out) -> None:
    if fmt == "csv":
        out.write("E,R,T,region,flags\n")
        for r in records:
            rs = _fmt(r.R) if r.R is not None else ""
            ts = _fmt(r.T) if r.T is not None else ""
            out.write(f"{_fmt(r.E)},{rs},{ts},{r.region},{r.flags}\n")
    else:
        payload = [
            {
                "E": _round12(r.E),
                "R": _round12(r.R) if r.R is not None else None,
                "T": _round12(r.T) if r.T is not None else None,
                "region": r.region,
                "flags": r.flags,
            }
            for r in records
        ]
        out.write(json.dumps(payload, indent=2))
        out.write("\n")


def _sweep_main(argv: list[str]) -> int:
    parser = _sweep_parser()
    args = parser.parse_args(argv)
    if args.steps < 1:
        parser.error(f"--steps must be >= 1, got {args.steps}")
    if not args.emax >= args.emin:
        parser.error("--emax must be >= --emin")
    if args.emin <= args.m:
        parser.error(f"--emin must exceed the mass m={args.m}")
    try:
        records, oracle_failed = sweep_records(args)
    except (ConvergenceError, MatchingError, DomainError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return _EXIT_NUMERICAL
    _emit_sweep(records, args.format, sys.stdout)
    singular = [r for r in records if r.flags == "singular"]
    if singular:
        print(
            f"{len(singular)} singular grid point(s) flagged and skipped",
            file=sys.stderr,
        )
    if oracle_failed or (args.strict and singular):
        return _EXIT_CHECK
    return _EXIT_OK


def _wavefunction_main(argv: list[str]) -> int:
    parser = _wavefunction_parser()
    args = parser.parse_args(argv)
    if args.points < 2:
        parser.error(f"--points must be >= 2, got {args.points}")
    if args.barrier is Barrier.STEP:
        parser.error("wavefunction dumps support tanh and lambertw barriers only")

    xs = np.linspace(args.xmin, args.xmax, args.points)
    rows = []
    for x in xs:
        x = float(x)
        try:
            if args.barrier is Barrier.TANH:
                s = tanh_wave(args.E, args.m, args.V0, args.b, args.c1, args.c2, x)
            else:
                s = lw_wave(args.E, args.m, args.V0, args.sigma, args.c1, args.c2, x)
        except (DomainError, ConvergenceError) as exc:
            print(f"numerical failure at x={_fmt(x)}: {exc}", file=sys.stderr)
            return _EXIT_NUMERICAL
        rows.append((x, s.phi, current(s)))

    sys.stdout.write("x,phi_re,phi_im,density,current\n")
    for x, phi, j in rows:
        sys.stdout.write(
            f"{_fmt(x)},{_fmt(phi.real)},{_fmt(phi.imag)},"
            f"{_fmt(abs(phi) ** 2)},{_fmt(j)}\n"
        )
    js = np.array([j for _, _, j in rows])
    j_mean = float(js.mean())
    j_dev = float(np.abs(js - j_mean).max())
    rel = j_dev / abs(j_mean) if j_mean != 0.0 else j_dev
    print(
        f"current self-check: mean j = {_fmt(j_mean)}, "
        f"max deviation = {j_dev:.3e} (relative {rel:.3e})",
        file=sys.stderr,
    )
    return _EXIT_OK


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if argv and argv[0] == "wavefunction":
        return _wavefunction_main(argv[1:])
    return _sweep_main(argv)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
