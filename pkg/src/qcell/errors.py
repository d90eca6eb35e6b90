"""Exception hierarchy. CLI maps these onto exit codes."""


class QCellError(Exception):
    """Base class for all engine errors."""


class NotLaurent(QCellError):
    """A scalar that must lie in Z[q^{+-1/2}] has a nontrivial denominator."""


class GramMismatch(QCellError):
    """Computed pairing disagrees with the diagonal closed form."""


class ConventionMismatch(QCellError):
    """No enumerated root-vector convention passes validation."""


class NotInSubalgebra(QCellError):
    """Element fails the residual check against the chosen PBW span."""


class NotTriangular(QCellError):
    """No total order makes the bar matrix unitriangular."""


class NoSolution(QCellError):
    """Triangular solve requires a coefficient outside q^{-1}Z[q^{-1}]."""


class NotQCommuting(QCellError):
    """Pair of elements has no uniform q-commutation exponent."""


class HypothesisFailed(QCellError):
    """A certification attached to the minor identification failed."""


class SeedIncompatible(QCellError):
    """Quantum seed fails a q-commutation or compatibility check."""


class DivisionFailed(QCellError):
    """Exchange-relation division has no solution in the algebra."""


class ResourceBound(QCellError):
    """Requested computation exceeds the configured degree ceiling."""
