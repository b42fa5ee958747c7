"""Exception hierarchy shared by every module."""


class SkewNFError(Exception):
    """Base class for all errors raised by skewnf."""


class DimensionMismatch(SkewNFError, ValueError):
    pass


class PatternViolation(SkewNFError, ValueError):
    pass


class UnsupportedRing(SkewNFError, TypeError):
    pass


class OddSize(SkewNFError, ValueError):
    pass


class EvenSize(SkewNFError, ValueError):
    pass


class BadSize(SkewNFError, ValueError):
    pass


class NotSkewSymmetric(SkewNFError, ValueError):
    pass


class UnsupportedEigenvalues(SkewNFError, ValueError):
    """The characteristic polynomial has a factor with no root in Q(i)."""


class PairingViolation(SkewNFError, ValueError):
    pass


class NotAMember(SkewNFError, ValueError):
    pass


class SegmentNotInVStar(SkewNFError, ValueError):
    pass


class DenominatorVanishes(SkewNFError, ZeroDivisionError):
    pass


class NotNilpotent(SkewNFError, ValueError):
    pass


class NonRationalCoordinate(SkewNFError, ValueError):
    pass


class ResourceBudgetExceeded(SkewNFError, RuntimeError):
    pass


class NotZeroDimensional(SkewNFError, ValueError):
    pass


class NotShapePosition(SkewNFError, ValueError):
    pass
