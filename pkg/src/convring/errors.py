"""Exception hierarchy.

Every domain error carries its class name verbatim into CLI reports, so the
names here are part of the external interface.
"""


class ConvRingError(Exception):
    """Base class for all domain errors raised by this package."""


class NotSquarefree(ConvRingError):
    pass


class IndexOutOfRange(ConvRingError):
    pass


class ShapeMismatch(ConvRingError):
    pass


class ShapeError(ConvRingError):
    pass


class ComponentCountMismatch(ConvRingError):
    pass


class SizeOutOfRange(ConvRingError):
    pass


class MixedRings(ConvRingError):
    pass


class RingMismatch(ConvRingError):
    pass


class RankDeficient(ConvRingError):
    pass


class DegreeCapExceeded(ConvRingError):
    pass


class NotInjective(ConvRingError):
    pass


class NonConstantDegree(ConvRingError):
    pass


class ZeroColumnDegree(ConvRingError):
    pass


class NotObservable(ConvRingError):
    pass


class NotColumnReduced(ConvRingError):
    pass


class DimensionMismatch(ConvRingError):
    pass


class Inconclusive(ConvRingError):
    """The equivalence search hit its candidate cap before deciding."""


class NotMinimal(ConvRingError):
    pass


class NoCommonSplit(ConvRingError):
    """No single set of output coordinates works for every component."""


class NotReachable(ConvRingError):
    pass


class StageMismatch(ConvRingError):
    """A stage of the worked-example pipeline disagreed with its reference."""

    def __init__(self, stage: str, detail: str = ""):
        self.stage = stage
        self.detail = detail
        super().__init__(f"{stage}: {detail}" if detail else stage)
