"""Exception types shared across the package."""


class PolytopeError(Exception):
    """Base class for every error raised by this library."""


class EmptyPolytope(PolytopeError):
    """A polytope was constructed from an empty point set."""


class DimensionMismatch(PolytopeError):
    """Operands live in different ambient dimensions, or the dimension is illegal."""


class InvalidParameter(PolytopeError):
    """A numeric parameter is outside its allowed range."""


class NotSymmetric(PolytopeError):
    """The operation requires a centrally symmetric input."""


class SliceMismatch(PolytopeError):
    """A caller-supplied hyperplane slice disagrees with the polytope it slices."""


class SearchCapExceeded(PolytopeError):
    """The brute-force search domain is larger than the configured cap."""


class IdentityCheckFailed(PolytopeError):
    """An internally constructed certificate failed exact re-verification.

    This signals a defect in the library, never bad input data.
    """


class ZeroPolynomial(PolytopeError):
    """The zero polynomial has no Newton polytope."""


class ParseError(PolytopeError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(ParseError):
    """A name in the input is not among the declared variables."""

    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable {name!r}", position)
        self.name = name


class InputFormatError(PolytopeError):
    """A JSON document does not match the expected schema."""
