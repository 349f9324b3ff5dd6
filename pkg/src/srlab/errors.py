"""Exception types shared across the library.

Every precondition failure raises a named subclass of SrlabError so callers
(and the CLI) can map failures to exit codes without parsing messages.
BudgetExceeded is special: enumeration routines attach the best upper bound
they found before running out of budget.
"""


class SrlabError(ValueError):
    """Base class for all library errors."""


class NotPrime(SrlabError):
    pass


class Reducible(SrlabError):
    pass


class DegreeMismatch(SrlabError):
    pass


class NotSubfield(SrlabError):
    pass


class LengthMismatch(SrlabError):
    pass


class DimensionMismatch(SrlabError):
    pass


class NotCoprime(SrlabError):
    pass


class NoNontrivialCoset(SrlabError):
    pass


class BadDelta(SrlabError):
    pass


class NotDivisor(SrlabError):
    pass


class ProfileMismatch(SrlabError):
    pass


class FieldMismatch(SrlabError):
    pass


class NonUniformProfile(SrlabError):
    pass


class NotSelfDual(SrlabError):
    pass


class NotF4(SrlabError):
    pass


class SearchExceeded(SrlabError):
    pass


class DistanceExceedsLength(SrlabError):
    pass


class MethodUnavailable(SrlabError):
    pass


class UnknownTable(SrlabError):
    pass


class ZeroCode(SrlabError):
    """Distance queries on the zero code are undefined."""


class BudgetExceeded(SrlabError):
    """Enumeration budget ran out before the search completed.

    `best` carries the lightest weight seen so far (an upper bound on the
    true minimum, not exact) and `enumerated` how many words were examined.
    """

    def __init__(self, message, best=None, enumerated=0):
        super().__init__(message)
        self.best = best
        self.enumerated = enumerated
