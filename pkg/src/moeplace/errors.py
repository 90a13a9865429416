"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: configuration problems -> 2,
infeasible placement instances -> 3, file/trace parse failures -> 4.
"""


class MoeplaceError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(MoeplaceError):
    """Invalid experiment configuration (bad value, unknown key, bad combination)."""


class TopologyError(MoeplaceError):
    """Malformed cluster graph (e.g. disconnected network)."""


class TraceParseError(MoeplaceError):
    """Malformed activation trace file."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class InfeasibleError(MoeplaceError):
    """No placement can satisfy the capacity constraints."""
