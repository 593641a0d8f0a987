"""Exception hierarchy shared by all modules."""


class KnnError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(KnnError, ValueError):
    """Matrix or index-set dimensions do not line up."""


class IndexRangeError(KnnError, ValueError):
    """An index (row, column, generator subscript) is out of range."""


class MatrixParseError(KnnError, ValueError):
    """A matrix or word document is malformed."""


class SingularMatrixError(KnnError, ValueError):
    """An operation requires an invertible matrix."""


class ShapeError(KnnError, ValueError):
    """A matrix does not have the band/triangular shape an operation assumes."""


class DomainError(KnnError, ValueError):
    """Input is outside the semigroup or parameter domain of an operation."""


class ArityError(KnnError, ValueError):
    """Parameter count does not match a word or generator family."""


class ZeroDenominatorError(KnnError, ZeroDivisionError):
    """A continued fraction or parameter transform hit a zero denominator."""


class TwoIrreducibleLettersError(KnnError, ValueError):
    """A word contains two K (or T) letters; factor the evaluated matrix instead."""


class CellSplitRequiredError(KnnError, ValueError):
    """The word contains the parameter-dependent e_{n-1} e_{n-2} T pattern."""


class NotCanonicalizableError(KnnError, ValueError):
    """The word is outside the canonical families handled by canonicalize."""


class QuotientError(KnnError, ValueError):
    """Weak-order division failed; signals inconsistent classification input."""
