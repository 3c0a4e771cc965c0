"""Exception hierarchy shared by all singchi modules.

Every failure that a caller can act on is a subclass of SingchiError, so
`except SingchiError` at the CLI boundary maps cleanly onto exit codes.
"""


class SingchiError(Exception):
    """Base class for all singchi errors."""


class PolyParseError(SingchiError):
    """Raised on malformed polynomial text; carries the offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(SingchiError):
    """An identifier was used that is not declared in the ring."""


class NonDivisibleError(SingchiError):
    """An exact polynomial division left a remainder; indicates an internal bug."""


class EmptyArgsError(SingchiError):
    """A divided difference was requested with no arguments."""


class ZeroDegreeError(SingchiError):
    """A resultant was requested in a variable one argument does not contain."""


class ResourceLimitError(SingchiError):
    """The reduction-step budget of the standard basis engine was exhausted."""


class NonIsolatedError(SingchiError):
    """The hypersurface singularity has a non-isolated critical locus."""


class NotAtOriginError(SingchiError):
    """The input does not define a germ at the origin."""


class NotICISError(SingchiError):
    """The presentation is not an isolated complete intersection singularity."""


class NotZeroDimensionalError(SingchiError):
    """A point count was requested for an ideal of positive dimension."""


class NotNormalFormError(SingchiError):
    """Map components are not in the expected coordinate normal form."""


class NotCorankOneError(SingchiError):
    """The differential of the germ does not have rank exactly n-1 at 0."""


class QuadrupleOrbitError(SingchiError):
    """The ordered quadruple point count is not a whole number of orbits."""


class NonIntegralChiError(SingchiError):
    """An Euler characteristic formula produced a non-integer value."""


class NegativeMuImageError(SingchiError):
    """The image Milnor number evaluated to a negative value."""


class UnknownEntryError(SingchiError):
    """A catalog name was requested that does not exist."""


class BadParamsError(SingchiError):
    """Parameters passed to a catalog family violate its constraints."""
