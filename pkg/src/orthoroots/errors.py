"""Shared exception types mapped to CLI exit codes."""


class ConfigError(ValueError):
    """Invalid parameters, flags, or config files (CLI exit code 1)."""


class NonConvergenceError(RuntimeError):
    """A doubling/refinement loop hit its cap without stabilizing (CLI exit code 2).

    Carries the last two estimates when available.
    """

    def __init__(self, message, estimates=None):
        super().__init__(message)
        self.estimates = estimates
