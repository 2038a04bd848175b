"""Exception types raised across the package."""


class CatalogMiss(KeyError):
    """No matrix is stored for the requested (name, ordering) pair."""


class NoSingleGenerator(ValueError):
    """A section-II name is a half-sum and has no single-generator identification."""


class NotClosedError(ValueError):
    """A bracket of two basis elements leaves the span of the basis."""

    def __init__(self, pair, message=None):
        self.pair = pair
        super().__init__(message or f"[{pair[0]}, {pair[1]}] is not in the span of the basis")


class InadmissibleParameters(ValueError):
    """Oscillator parameters violate positivity or the 4AB - C^2 > 0 condition."""


class NoQuantumRealization(ValueError):
    """The generator has no hatted (ladder-operator) counterpart."""


class OrderingMismatch(ValueError):
    """Objects expressed in different phase-space orderings were combined."""
