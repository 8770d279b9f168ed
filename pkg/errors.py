"""Exception hierarchy shared by every workbench module.

Each error class carries the process exit code the command line front end
uses when the error escapes a command.
"""


class SteklovError(Exception):
    """Base class for workbench errors."""

    exit_code = 1


class ConfigError(SteklovError, ValueError):
    """Invalid configuration, catalog name, flag or parameter value."""

    exit_code = 1


class MeshError(SteklovError, ValueError):
    """Mesh construction or mesh validity failure."""

    exit_code = 2


class SolverError(SteklovError, RuntimeError):
    """Linear solve, factorization or eigensolver failure."""

    exit_code = 3
