"""Exception hierarchy shared by all aritygap modules."""


class ArityGapError(Exception):
    """Base class for every error raised by this package."""


class LengthMismatch(ArityGapError, ValueError):
    """Value table does not have exactly k**n entries."""


class ValueOutOfRange(ArityGapError, ValueError):
    """A table entry or argument coordinate lies outside its range."""


class IndexOutOfRange(ArityGapError, IndexError):
    """A 1-based variable index is not in {1, ..., n}."""


class SameIndex(ArityGapError, ValueError):
    """Variable identification needs two distinct indices."""


class ArityMismatch(ArityGapError, ValueError):
    """A substitution's source arity differs from the function's arity."""


class DomainMismatch(ArityGapError, ValueError):
    """Two functions do not share domain and codomain sizes."""


class EssentialArityTooSmall(ArityGapError, ValueError):
    """Operation needs at least two essential variables."""


class NotBoolean(ArityGapError, ValueError):
    """Operation is only defined for k = b = 2."""


class SpecInvalid(ArityGapError, ValueError):
    """A generator spec violates its structural constraints."""


class GammaNotSurjective(SpecInvalid):
    """Lift map gamma must cover every element of the base set."""


class PhiNotInjective(SpecInvalid):
    """Lift map phi must be injective."""


class HypothesisNotMet(ArityGapError, ValueError):
    """Input does not satisfy the hypothesis of the checked statement."""


class NotTotallyEssential(HypothesisNotMet):
    """Function must depend on all of its variables."""


class BudgetExceeded(ArityGapError):
    """Requested enumeration or table is larger than the configured budget."""


class ParseError(ArityGapError, ValueError):
    """Malformed function file."""
