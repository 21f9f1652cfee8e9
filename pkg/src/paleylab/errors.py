"""Error types shared across the package.

GuardError marks a request outside a documented workload guard (CLI exit
code 2), ConvergenceError a solver that hit its iteration cap (exit code 3).
"""


class GuardError(RuntimeError):
    """A size/workload guard was exceeded; the request was refused."""


class ConvergenceError(RuntimeError):
    """An iterative solver failed to reach its tolerance within its cap."""


class NumericallyInvalid(RuntimeError):
    """A value that must be an integer strayed too far from one."""
