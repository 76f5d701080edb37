"""Exception types shared across the package."""


class TropliftError(Exception):
    """Base class for all package errors."""


class SizeLimit(TropliftError):
    """Input exceeds the exhaustive-enumeration bound."""


class DimensionMismatch(TropliftError):
    """Matrix dimensions are incompatible for the requested operation."""


class InversionOfZero(TropliftError):
    """Inverse of a series with no known nonzero term."""


class ValuationUnknown(TropliftError):
    """All known terms cancelled but the series is only known up to a finite order."""


class NegativeLeading(TropliftError):
    """Square root of a series whose leading coefficient is negative."""


class NestedRadical(TropliftError):
    """Operation would introduce a second independent square-root radicand."""


class NotQuadratic(TropliftError):
    """Polynomial is not quadratic in the requested variable."""


class RadicandMismatch(TropliftError):
    """Arithmetic between quadratic-extension values with different radicands."""


class RankTooHigh(TropliftError):
    """Matrix has tropical rank above the level the operation supports."""


class InvalidTree(TropliftError):
    """Leaf-colored tree violates the two-colors-on-each-side condition."""


class NotBarvinok2(TropliftError):
    """Matrix has no min-plus factorization through two inner dimensions."""


class NotCaterpillar(TropliftError):
    """Tree's internal vertices do not lie on a single path."""


class NotRank2(TropliftError):
    """Matrix does not have (symmetric) tropical rank at most two."""


class NotSingular(TropliftError):
    """Tropical determinant has a unique minimizing monomial."""


class SameSigns(TropliftError):
    """Tied minimizing monomials all share one sign, so no positive lift exists."""


class MinorSignsOpposed(TropliftError):
    """The two row/column-deleted minors certify a negative discriminant."""


class NotOnEdge(TropliftError):
    """Tied monomials do not span an edge of the relevant Newton polytope."""


class DegenerateGeneric(TropliftError):
    """Random coefficient draw hit an unexpected cancellation; retry budget left."""


class GenericRetryExhausted(TropliftError):
    """All retries of the seeded generic construction failed verification."""


class UnknownFixture(TropliftError):
    """Requested bundled example input does not exist."""
