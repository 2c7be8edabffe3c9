"""Exception taxonomy shared across the package."""


class SynckitError(Exception):
    """Base class for every error raised by this library."""


class MalformedTransitionError(SynckitError):
    """Transition table has the wrong shape or an out-of-range entry."""

    def __init__(self, message: str, row: int | None = None, column: int | None = None):
        super().__init__(message)
        self.row = row
        self.column = column


class NotInvariantError(SynckitError):
    """A basis handed to the minimal polynomial is not closed under the letter."""


class BudgetExhaustedError(SynckitError):
    """Escape search exceeded its depth budget or stabilized without escaping.

    Reaching this state means a precondition was violated upstream, most
    often that the automaton is not synchronizing after all.
    """


class InvalidSubsetError(SynckitError):
    """Subset handed to an expansion step violates its size or cycle bounds."""


class HypothesisError(SynckitError):
    """An input violates a hypothesis of the synthesis or coloring pipeline."""


class NotPrimeError(HypothesisError):
    """The cycle length is required to be prime but is not."""


class NotSynchronizingError(HypothesisError):
    """The automaton admits no reset word."""


class NotOneClusterError(HypothesisError):
    """The chosen letter does not have a single cycle in its functional graph."""


class CapExceededError(SynckitError):
    """An exhaustive search was asked to run beyond its configured cap."""


class GenerationError(SynckitError):
    """Seeded rejection sampling hit its attempt cap without an instance."""


class ColoringSearchBudgetError(SynckitError):
    """Coloring search ran out of work budget before deciding existence."""


class ColoringAnomalyError(SynckitError):
    """Exhaustive coloring search found nothing; this contradicts the theory.

    A digraph that passes every hypothesis check is guaranteed a
    synchronizing coloring, so exhaustion is reported loudly instead of
    being folded into an ordinary miss.
    """
