"""Exception hierarchy. Class names double as the error names printed by the CLI."""


class ArspaceError(Exception):
    """Base class for all domain errors."""


class NonAlternating(ArspaceError):
    pass


class EmptyIndexSet(ArspaceError):
    pass


class UnsortedPoints(ArspaceError):
    pass


class PointIsSinkOrSource(ArspaceError):
    pass


class PointInfinite(ArspaceError):
    pass


class PointIsIndexed(ArspaceError):
    pass


class IntervalSyntaxError(ArspaceError):
    pass


class EmptyInterval(ArspaceError):
    pass


class ClosedInfinity(ArspaceError):
    pass


class InvalidVariant(ArspaceError):
    pass


class ZeroHom(ArspaceError):
    pass


class InvalidSign(ArspaceError):
    pass


class SamePoint(ArspaceError):
    pass


class ApexObject(ArspaceError):
    pass


class NegativeExt(ArspaceError):
    pass
