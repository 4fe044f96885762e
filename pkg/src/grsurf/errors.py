"""Exception hierarchy shared by all modules."""


class GrsError(Exception):
    """Base class for errors raised by grsurf."""


class ParseError(GrsError, ValueError):
    """Malformed meridian expression.

    ``pos`` is the 0-based character offset at which parsing failed.
    """

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class DomainError(GrsError, ValueError):
    """Evaluation outside a function's or meridian's domain, or a non-finite result."""


class InvalidPointError(GrsError, ValueError):
    """The surface is not a valid timelike immersion at the requested parameter."""


class FrameError(GrsError):
    """The moving frame failed its orthonormality check."""


class SingularityError(GrsError, ValueError):
    """A denominator of a characterizing ODE vanished.

    ``factor`` names the guarded expression that hit its threshold.
    """

    def __init__(self, message, factor=None):
        self.factor = factor
        super().__init__(message)
