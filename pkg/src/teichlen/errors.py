"""Exception hierarchy shared by all modules.

The three broad classes map onto the CLI exit codes: ParseError -> 2,
ValidationError -> 3, NumericDomainError -> 4.
"""


class TeichlenError(Exception):
    """Base class for all library errors."""


class ParseError(TeichlenError):
    """A text input could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(TeichlenError):
    """Structurally invalid data: bad gluings, bad parameters, bad shapes."""


class NumericDomainError(TeichlenError):
    """Inputs outside the numeric domain of a formula."""


class ProjectionUndefinedError(NumericDomainError):
    """Orthogonal projection of an ideal point onto a geodesic it bounds."""


class NotCrossingError(NumericDomainError):
    """Two geodesics were required to cross transversally but do not."""


class NoCrossingsError(NumericDomainError):
    """A twist was requested for a curve pair with no intersections."""


class DegenerateHexagonError(NumericDomainError):
    """Alternating side lengths do not bound a right-angled hexagon."""


class NoCollarError(NumericDomainError):
    """Collar parameters leave no room for an embedded annulus."""


class TwistUndefinedError(NumericDomainError):
    """Twist estimate requested where the curve misses the pants curve."""


class TwistSpreadWarning(UserWarning):
    """Per-crossing twists spread wider than the conjugation bound allows."""
