"""Exception hierarchy.  Every error is a ``ValueError`` so callers that only
care about bad input can catch that."""


class CombinatoricsError(ValueError):
    pass


class NotNested(CombinatoricsError):
    pass


class SizeMismatch(CombinatoricsError):
    pass


class LengthMismatch(CombinatoricsError):
    pass


class BadBeadCount(CombinatoricsError):
    pass


class NotComponentwiseSkew(CombinatoricsError):
    pass


class QuotientMismatch(CombinatoricsError):
    pass


class IllegalMove(CombinatoricsError):
    pass


class NotAStrip(CombinatoricsError):
    pass


class ShapeMismatch(CombinatoricsError):
    pass


class OperatorUndefined(CombinatoricsError):
    pass


class NotInDomain(CombinatoricsError):
    pass


class DegreeMismatch(CombinatoricsError):
    pass


class NotUnitriangularConsistent(CombinatoricsError):
    pass
