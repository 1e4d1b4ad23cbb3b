"""Exception types shared across the package."""


class KmagicError(Exception):
    """Base class for all package errors."""


class GraphError(KmagicError):
    """Malformed graph input: bad vertex index, loop edge, bad format."""


class RegularityError(KmagicError):
    """An operation required a regular (or even-regular) graph."""


class FactorError(KmagicError):
    """A factorization precondition failed."""


class LabelingError(KmagicError):
    """A labeling is malformed: zero, missing, or out-of-range label."""


class BudgetError(KmagicError):
    """The search budget does not admit the instance."""
