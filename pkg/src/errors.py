"""Exception hierarchy shared by every subpackage.

Validation problems derive from ``AllocationError`` (itself a ``ValueError``),
so callers that only know about ``ValueError`` keep working. The CLI maps
``AllocationError`` to exit code 2 and prints ``code`` on stderr.
"""

from __future__ import annotations


class AllocationError(ValueError):
    """Base class for user-facing validation errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# circuit
class CircuitError(AllocationError):
    pass


class IndexOutOfRange(CircuitError):
    pass


class ArityMismatch(CircuitError):
    pass


class DuplicateControl(CircuitError):
    pass


class AlreadyMeasured(CircuitError):
    pass


class NotMeasured(CircuitError):
    pass


# statevec
class SimulationError(AllocationError):
    pass


class CapacityExceeded(SimulationError):
    pass


class ZeroShots(SimulationError):
    pass


class NormDrift(SimulationError):
    pass


# distload / market
class DistributionError(AllocationError):
    pass


class DegenerateVariance(DistributionError):
    pass


class NonSymmetric(DistributionError):
    pass


class NotPSD(DistributionError):
    pass


class SingularCovariance(DistributionError):
    pass


class DimensionMismatch(DistributionError):
    pass


class ParseError(AllocationError):
    pass


class NonPositiveLevel(ParseError):
    pass


class UnorderedDates(ParseError):
    pass


class MissingMonths(ParseError):
    pass


class TooShort(AllocationError):
    pass


class TooFewRows(AllocationError):
    pass


# portfolio
class PortfolioError(AllocationError):
    pass


class LengthMismatch(PortfolioError):
    pass


class BadWeights(PortfolioError):
    pass


class EmptyPath(PortfolioError):
    pass


class UnknownPolicy(PortfolioError):
    pass


class UnsupportedCost(PortfolioError):
    pass


# cli
class MissingArgument(AllocationError):
    pass
