"""Exception types shared across the library."""


class AnneidError(Exception):
    """Base class for every error raised by this library."""


class MalformedTables(AnneidError):
    """Raw tables cannot be interpreted at all (shapes, ranges, partitions)."""


class AxiomViolation(AnneidError):
    """Structural axioms fail; carries every recorded violation."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        head = "; ".join(f"{v.axiom} at {v.witness}" for v in self.violations[:3])
        tail = "" if len(self.violations) <= 3 else f" (+{len(self.violations) - 3} more)"
        super().__init__(f"{len(self.violations)} axiom violation(s): {head}{tail}")


class NotIdempotent(AnneidError):
    """A grade expected to satisfy gg = g does not."""


class NotRegular(AnneidError):
    """Operation requires a regular (cancellative) anneid."""


class NotModular(AnneidError):
    """Ideal admits no unity modulo itself."""


class NotRightIdeal(AnneidError):
    """Subset is not closed as a right ideal."""


class NotTwoSidedIdeal(AnneidError):
    """Subset is not closed as a two-sided ideal."""


class NotIdeal(AnneidError):
    """Ring subset expected to be an ideal is not."""


class SizeExceeded(AnneidError):
    """A construction would exceed the configured size bound."""

    def __init__(self, actual, limit):
        self.actual = actual
        self.limit = limit
        super().__init__(f"size {actual} exceeds limit {limit}")


class LatticeTooLarge(AnneidError):
    """Ideal-lattice enumeration passed the configured bound."""

    def __init__(self, count, limit):
        self.count = count
        self.limit = limit
        super().__init__(f"lattice has more than {limit} members (saw {count})")


class ConsistencyError(AnneidError):
    """Internal cross-check failed; never expected on valid inputs."""


class AlgorithmsDisagree(ConsistencyError):
    """Two independent algorithms for the same value returned different sets."""


class DegreesDiffer(ConsistencyError):
    """Unities modulo one proper modular ideal carry different degrees."""


class GenerationExhausted(AnneidError):
    """Rejection sampling spent its attempt budget without a valid instance."""


class InvalidInput(AnneidError):
    """Generator input tables are not what the generator requires."""


class PreconditionFailed(AnneidError):
    """A gated check was invoked although its preconditions do not hold."""


class ParseError(AnneidError):
    """An input document could not be parsed."""
