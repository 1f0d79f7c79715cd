"""Shared exception types."""


class VertexLabError(Exception):
    """Base class for all library errors."""


class TagMismatch(VertexLabError):
    """Arithmetic attempted between scalars of incompatible fields."""


class DivisionByZero(VertexLabError):
    pass


class NonSquare(VertexLabError):
    pass


class DegreeMismatch(VertexLabError):
    """Series operands disagree on variable count or truncation degree."""


class NonInvertibleConstantTerm(VertexLabError):
    pass


class SizeTooLarge(VertexLabError):
    """Requested enumeration exceeds the configured size cap."""


class SizeMismatch(VertexLabError):
    pass


class DegenerateParameters(VertexLabError):
    """Parameters violate a genericity precondition (repeated or vanishing)."""


class InvalidConfig(VertexLabError):
    pass


class InvalidHeight(VertexLabError):
    pass


class InvalidASM(VertexLabError):
    pass


class InvalidTriangle(VertexLabError):
    pass


class ZeroEntryAtMinusOne(VertexLabError):
    """A -1 position of an alternating sign matrix divides by a zero entry."""


class RepeatedVariable(VertexLabError):
    pass


class WidthTooSmall(VertexLabError):
    pass


class TruncationTooSmall(VertexLabError):
    pass


class DoesNotFitBox(VertexLabError):
    pass


class CapExceeded(VertexLabError):
    pass


class InvalidInput(VertexLabError):
    pass
