"""Exception types used across the package."""


class LockedMatroidError(Exception):
    """Base class for every error raised by this package."""


# -- basis list construction / validation ---------------------------------

class EmptyBases(LockedMatroidError):
    pass


class UnequalCardinality(LockedMatroidError):
    pass


class ExchangeViolation(LockedMatroidError):
    """Basis exchange fails for a concrete triple (B1, B2, e)."""

    def __init__(self, basis1, basis2, element):
        self.basis1 = tuple(basis1)
        self.basis2 = tuple(basis2)
        self.element = element
        super().__init__(
            "basis exchange fails: B1=%r, B2=%r, e=%r"
            % (self.basis1, self.basis2, element)
        )


class OutOfRange(LockedMatroidError):
    pass


# -- catalog ---------------------------------------------------------------

class UnknownName(LockedMatroidError):
    pass


class InvalidParams(LockedMatroidError):
    pass


class DisconnectedGraph(LockedMatroidError):
    pass


# -- minors / sums ---------------------------------------------------------

class OverlappingSets(LockedMatroidError):
    pass


class EmptyResult(LockedMatroidError):
    pass


class BasepointIsLoopOrColoop(LockedMatroidError):
    pass


class TooSmall(LockedMatroidError):
    pass


class Disconnected(LockedMatroidError):
    pass


# -- closures / locked structure --------------------------------------------

class LoopPresent(LockedMatroidError):
    def __init__(self, element):
        self.element = element
        super().__init__("loop present: element %r" % (element,))


class ColoopPresent(LockedMatroidError):
    def __init__(self, element):
        self.element = element
        super().__init__("coloop present: element %r" % (element,))


class NotProperSubset(LockedMatroidError):
    pass


# -- lattices ----------------------------------------------------------------

class NotLockedVertex(LockedMatroidError):
    pass


class LabelArityMismatch(LockedMatroidError):
    pass


# -- axiom system -------------------------------------------------------------

class DomainMismatch(LockedMatroidError):
    pass


class NoDecomposition(LockedMatroidError):
    pass


# -- polytope / LP -------------------------------------------------------------

class DimensionMismatch(LockedMatroidError):
    pass


class TooLarge(LockedMatroidError):
    pass


class Infeasible(LockedMatroidError):
    pass


class Unbounded(LockedMatroidError):
    pass


# -- iso engine -----------------------------------------------------------------

class NotZeroLocked(LockedMatroidError):
    pass


# -- file formats ------------------------------------------------------------------

class FormatError(LockedMatroidError):
    pass
