"""Argument parsing and the command dispatcher."""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

import config
from cli.commands import cmd_orbit_count, cmd_spectrum, cmd_sweep, cmd_verify
from cli.run_config import FORMATS, MESH_FORMATS, RunConfig, SweepConfig, parse_resolution
from errors import ConfigError, SteklovError

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises ConfigError instead of exiting with status 2."""

    def error(self, message):
        raise ConfigError(message)


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    defaults = config.SETTINGS.defaults
    parser.add_argument("--surface", default=defaults.surface,
                        help="critical-catenoid, catenoid:<rho>, unit-disk or flat-annulus:<inner-radius>")
    parser.add_argument("--res", default="x".join(str(n) for n in defaults.resolution),
                        help="radial x angular resolution, e.g. 40x160")
    parser.add_argument("--modes", type=int, default=defaults.modes, help="number of eigenpairs")
    parser.add_argument("--tol-eigen", type=float, default=defaults.tolEigen, help="relative cluster tolerance")
    parser.add_argument("--tol-parity", type=float, default=config.PARITY_TOLERANCE, help="relative parity tolerance")
    parser.add_argument("--nodal-tau", type=float, default=config.NODAL_ZERO_THRESHOLD, help="relative nodal zero threshold")
    parser.add_argument("--out", type=Path, default=None, help="report path (default: standard output)")
    parser.add_argument("--format", choices=FORMATS, default=defaults.format, help="report format")
    parser.add_argument("--export-mesh", choices=MESH_FORMATS, default=None,
                        help="also write the mesh, per-vertex modes and fundamental-domain labels")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="steklov", description="Steklov eigenvalue workbench for free boundary minimal surfaces.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    _add_run_flags(sub.add_parser("spectrum", help="compute a Steklov spectrum"))
    _add_run_flags(sub.add_parser("verify", help="run the verification suite"))

    sweep = sub.add_parser("sweep", help="sweep the catenoid family")
    sweep.add_argument("--rho-min", type=float, required=True)
    sweep.add_argument("--rho-max", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)
    sweep.add_argument("--res", default="x".join(str(n) for n in config.SETTINGS.defaults.resolution))
    sweep.add_argument("--modes", type=int, default=config.SWEEP_MODES)
    sweep.add_argument("--tol-eigen", type=float, default=config.SETTINGS.defaults.tolEigen)
    sweep.add_argument("--jobs", type=int, default=1, help="worker processes")
    sweep.add_argument("--out", type=Path, default=None)
    sweep.add_argument("--format", choices=FORMATS, default="csv")

    orbit = sub.add_parser("orbit-count", help="nodal domains on the reflection orbit")
    orbit.add_argument("edge", nargs="?", help="ending edge: gamma, e1, e2 or e3")
    orbit.add_argument("--dihedral", type=int, default=None, help="use the wedge group of order 4n")
    orbit.add_argument("--contact", action="store_true", help="print the contact report for every ending")
    orbit.add_argument("--out", type=Path, default=None)
    return parser


def _run_config(args) -> RunConfig:
    return RunConfig(
        surface=args.surface,
        resolution=parse_resolution(args.res),
        num_modes=args.modes,
        tol_eigen=args.tol_eigen,
        tol_parity=args.tol_parity,
        nodal_tau=args.nodal_tau,
        out=args.out,
        report_format=args.format,
        export_mesh=args.export_mesh,
    )


def dispatch(args) -> int:
    if args.command == "spectrum":
        return cmd_spectrum(_run_config(args))
    if args.command == "verify":
        return cmd_verify(_run_config(args))
    if args.command == "sweep":
        return cmd_sweep(SweepConfig(
            rho_min=args.rho_min,
            rho_max=args.rho_max,
            steps=args.steps,
            resolution=parse_resolution(args.res),
            num_modes=args.modes,
            tol_eigen=args.tol_eigen,
            jobs=args.jobs,
            out=args.out,
            report_format=args.format,
        ))
    if args.command == "orbit-count":
        return cmd_orbit_count(args.edge, dihedral=args.dihedral, contact=args.contact, out=args.out)
    raise ConfigError("missing command (spectrum, verify, sweep or orbit-count)")


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the command and map errors to exit codes.

    Returns:
        0 on success, 1 configuration error, 2 mesh error, 3 solver error,
        4 verification failure.
    """
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            logging.getLogger().setLevel(logging.DEBUG)
        return dispatch(args)
    except SteklovError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
