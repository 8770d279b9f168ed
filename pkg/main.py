"""Main entry point for the Steklov workbench.

This module configures logging to standard error and hands the command
line to the cli package. Reports go to standard output or --out.

Usage:
    python main.py spectrum --surface critical-catenoid --res 40x160 --modes 8
    python main.py verify --surface unit-disk --res 32x128
    python main.py sweep --rho-min 0.8 --rho-max 1.6 --steps 17
    python main.py orbit-count gamma

    Or use the provided run script:
        ./run.sh spectrum --surface unit-disk
"""

import logging
import sys

import cli


def main() -> int:
    """Run one command and return its exit code."""
    logging.basicConfig(
        level=logging.INFO,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    return cli.main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
