"""Command line front end.

This module parses flags into validated run configurations, runs the
spectrum, verify, sweep and orbit-count commands, and maps library errors
to exit codes.
"""

from cli.run_config import RunConfig, SweepConfig, parse_resolution
from cli.commands import (
    EXIT_OK,
    EXIT_VERIFY_FAILED,
    SWEEP_COLUMNS,
    cmd_orbit_count,
    cmd_spectrum,
    cmd_sweep,
    cmd_verify,
    sweep_point,
)
from cli.parser import build_parser, main

__all__ = [
    'RunConfig',
    'SweepConfig',
    'parse_resolution',
    'EXIT_OK',
    'EXIT_VERIFY_FAILED',
    'SWEEP_COLUMNS',
    'cmd_orbit_count',
    'cmd_spectrum',
    'cmd_sweep',
    'cmd_verify',
    'sweep_point',
    'build_parser',
    'main',
]
