"""Exception hierarchy shared by every diskmetrics module."""


class DiskMetricsError(ValueError):
    """Base class for all domain errors raised by the library."""


class DegenerateAngle(DiskMetricsError):
    pass


class ParallelLines(DiskMetricsError):
    pass


class CollinearPoints(DiskMetricsError):
    pass


class DegenerateLine(DiskMetricsError):
    pass


class EqualModulus(DiskMetricsError):
    pass


class CollinearWithOrigin(DiskMetricsError):
    pass


class PoleInput(DiskMetricsError):
    pass


class OutsideDisk(DiskMetricsError):
    pass


class CoincidentPoints(DiskMetricsError):
    pass


class DegenerateQuadruple(DiskMetricsError):
    pass


class NotCollinear(DiskMetricsError):
    pass


class NotEqualModulus(DiskMetricsError):
    pass


class DegenerateLeadingCoefficient(DiskMetricsError):
    pass


class DomainError(DiskMetricsError):
    pass


class ConvergenceFailure(DiskMetricsError):
    pass


class ChordExhausted(DiskMetricsError):
    pass


class ParseError(DiskMetricsError):
    pass
