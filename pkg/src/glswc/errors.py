"""Error taxonomy.

Every failure the library reports on purpose is one of these classes; the
class name doubles as the error label printed by the command line tool.
"""


class SWCError(Exception):
    """Base class for all library errors."""

    @property
    def label(self) -> str:
        return type(self).__name__


class SignatureMismatch(SWCError, ValueError):
    pass


class CapRequired(SWCError, ValueError):
    """Raised when an operation needs a degree cap the ring does not carry."""


class BasisTooLarge(SWCError):
    pass


class NotAPerfectSquare(SWCError, ValueError):
    pass


class NonIntegral(SWCError, ValueError):
    """A character vector that is not the character of any representation."""


class NegativeMultiplicity(SWCError, ValueError):
    pass


class OddMultiplicity(SWCError, ValueError):
    pass


class InconsistentParity(SWCError, ValueError):
    pass


class NotReal(SWCError, ValueError):
    pass


class UnsupportedCharacterValue(SWCError):
    pass


class ValidationError(SWCError, ValueError):
    """Malformed user input (descriptor files, out-of-range parameters)."""


MATHEMATICAL_ERRORS = (
    NonIntegral,
    NegativeMultiplicity,
    OddMultiplicity,
    InconsistentParity,
    NotReal,
    NotAPerfectSquare,
    UnsupportedCharacterValue,
)
