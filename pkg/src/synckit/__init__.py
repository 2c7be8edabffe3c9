"""Certified reset words for one-cluster synchronizing automata.

The library constructs reset words for automata that have a letter whose
functional graph carries a single cycle of prime length, certifying the
classical quadratic length bound (n - 1)^2 with exact integer arithmetic,
and extends the construction to synchronizing colorings of aperiodic
constant-out-degree digraphs around a prime cycle.
"""

from .automaton import Automaton, Word, mask_from, states_of
from .errors import (
    BudgetExhaustedError,
    CapExceededError,
    ColoringAnomalyError,
    ColoringSearchBudgetError,
    GenerationError,
    HypothesisError,
    InvalidSubsetError,
    MalformedTransitionError,
    NotInvariantError,
    NotOneClusterError,
    NotPrimeError,
    NotSynchronizingError,
    SynckitError,
)
from .generators import GeneratorSpec, cerny, generate, random_digraph, random_one_cluster
from .linalg import (
    Basis,
    IntPolynomial,
    act,
    balanced_vector,
    cycle_pairing,
    fixed_space,
    minimal_poly_on,
    span,
)
from .oracle import SubsetSearchResult, bfs_shortest_reset, greedy_pair_reset
from .roadcolor import (
    ColoringCertificate,
    Digraph,
    DigraphDiagnostics,
    color,
    color_digraph,
    find_prime_cycle,
    iter_prime_cycles,
    validate,
)
from .structure import (
    OneClusterCertificate,
    certificate,
    find_one_cluster_letters,
    functional_cycles,
    is_prime,
    preferred_certificate,
)
from .synthesis import (
    EscapeResult,
    SynthesisStep,
    SynthesisTrace,
    VectorFamily,
    escape_search,
    expand_singleton,
    expand_step,
    expand_subset,
    family_of,
    length_bound,
    synchronize_one_cluster_prime,
    worst_level_bound,
)

__version__ = "0.1.0"
