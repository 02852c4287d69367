"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: user errors exit 1, guard refusals
exit 2 and broken internal invariants exit 3.
"""


class HeckeError(Exception):
    """Base class for all library errors."""


class DiagramError(HeckeError, ValueError):
    """Malformed or unsupported diagram, parameter vector or label."""


class UnclassifiableError(DiagramError):
    """A component is not of finite simply-laced type."""


class OutOfScopeError(DiagramError):
    """The request is well formed but outside what the library models."""


class GuardExceeded(HeckeError):
    """An enumeration would exceed the configured size limit."""

    def __init__(self, what: str, size: int, guard: int):
        super().__init__(f"{what} has size {size}, above the guard {guard}")
        self.what = what
        self.size = size
        self.guard = guard


class InvariantError(HeckeError, AssertionError):
    """An identity that must hold by theory failed; this is a bug."""
