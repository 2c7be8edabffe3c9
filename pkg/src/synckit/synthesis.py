"""Reset word synthesis for one-cluster automata with a prime cycle.

The construction tracks subsets of the distinguished cycle ``C`` and grows
them by preimages.  A seed step expands some singleton of ``C`` to a subset
of size at least two; grow steps then strictly enlarge the subset until it
covers ``C``.  Reading the recorded words in reverse order after ``a^level``
collapses the whole state set to a single state, and the total length obeys

    n - p + 1 + 2*level + (p - 2) * (n + level)  <=  (n - 1)^2.

Growth witnesses come from an exact escape search: starting from a family
of acted balanced vectors whose cycle pairings all vanish, a breadth-first
sweep prepends letters until some vector pairs nonzero against the cycle.
Successor vectors already inside the visited span are pruned, which keeps
the sweep linear-algebra small while preserving the depth guarantee of
``n - dim(span of the family)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .automaton import Automaton, Word
from .errors import (
    BudgetExhaustedError,
    InvalidSubsetError,
    NotOneClusterError,
    NotPrimeError,
    NotSynchronizingError,
)
from .linalg import IntVector, act, act_letter, balanced_vector, cycle_pairing, span
from .structure import OneClusterCertificate, certificate


@dataclass(frozen=True)
class FamilyItem:
    """One tagged vector: the word and subset it was built from."""

    word: Word
    subset: int
    vector: IntVector


@dataclass(frozen=True)
class VectorFamily:
    """Acted balanced vectors tagged by their provenance.

    ``zero_sum`` records whether the vectors add up to the zero vector,
    which is what entitles an expansion step to a positive pairing.
    """

    items: tuple[FamilyItem, ...]
    zero_sum: bool


def family_of(aut: Automaton, p: int, tagged: Iterable[tuple[Word, int]]) -> VectorFamily:
    """Build the family ``act(word, balanced_vector(subset))`` per tag."""
    items = []
    total = [0] * aut.n
    for word, subset in tagged:
        v = act(aut, tuple(word), balanced_vector(subset, p, aut.n))
        items.append(FamilyItem(tuple(word), subset, v))
        for i, e in enumerate(v):
            total[i] += e
    return VectorFamily(tuple(items), not any(total))


@dataclass(frozen=True)
class EscapeResult:
    word: Word
    index: int
    budget: int  # n minus the dimension of the family span


def escape_search(aut: Automaton, family: VectorFamily, cycle_mask: int) -> EscapeResult:
    """Shortest-by-construction word giving some vector a nonzero pairing.

    If a family vector already pairs nonzero the empty word is returned
    with the first such index.  Otherwise letters are prepended breadth
    first; every successor vector found inside the span of vectors seen so
    far is pruned, since linearity means it can contribute no pairing that
    an already-visited vector does not.  Each level must therefore grow the
    visited span, which caps the search depth at ``n - dim(family span)``.
    Exhausting that budget, or running out of new directions entirely,
    means the synchronizing hypothesis was violated upstream.
    """
    vectors = [item.vector for item in family.items]
    basis = span(vectors)
    budget = aut.n - basis.dim
    for t, item in enumerate(family.items):
        if cycle_pairing(cycle_mask, item.vector) != 0:
            return EscapeResult((), t, budget)
    frontier = [((), t, item.vector) for t, item in enumerate(family.items)]
    for _depth in range(1, budget + 1):
        nxt = []
        for word, t, v in frontier:
            for x in range(aut.k):
                u = act_letter(aut, x, v)
                extended = (x,) + word
                if cycle_pairing(cycle_mask, u) != 0:
                    return EscapeResult(extended, t, budget)
                basis, grew = basis.insert(u)
                if grew:
                    nxt.append((extended, t, u))
        if not nxt:
            raise BudgetExhaustedError(
                "escape search stabilized with every pairing zero; "
                "the automaton cannot be synchronizing")
        frontier = nxt
    raise BudgetExhaustedError(
        f"no escape within the depth budget {budget}; preconditions violated")


@dataclass(frozen=True)
class ExpandResult:
    word: Word
    index: int
    budget: int


def expand_step(aut: Automaton, family: VectorFamily, cycle_mask: int) -> ExpandResult:
    """Word plus family index whose subset grows strictly inside the cycle.

    Requires a zero-sum family: pairings across the family sum to zero, so
    one nonzero pairing forces a positive one somewhere.  Among positive
    indices the largest pairing wins, ties broken by least index.
    """
    if not family.zero_sum:
        raise InvalidSubsetError("expand_step needs a zero-sum family")
    esc = escape_search(aut, family, cycle_mask)
    best_index = -1
    best_gain = 0
    for j, item in enumerate(family.items):
        gain = cycle_pairing(cycle_mask, act(aut, esc.word, item.vector))
        if gain > best_gain:
            best_index, best_gain = j, gain
    assert best_index >= 0, "zero-sum family with a nonzero pairing has a positive one"
    return ExpandResult(esc.word, best_index, esc.budget)


@dataclass(frozen=True)
class SeedResult:
    state: int
    word: Word
    escape_length: int
    escape_budget: int


def expand_singleton(aut: Automaton, cert: OneClusterCertificate) -> SeedResult:
    """Some cycle state whose preimage under the returned word meets the
    cycle in at least two states.

    The family consists of every cycle singleton pushed through
    ``letter^level``; those vectors sum to zero because the level power
    pulls the cycle back to the full state set.  The word is the escape
    word followed by ``letter^level`` and is no longer than
    ``n - p + 1 + level``.
    """
    prefix = (cert.letter,) * cert.level
    family = family_of(aut, cert.p, ((prefix, 1 << q) for q in cert.cycle))
    res = expand_step(aut, family, cert.cycle_mask)
    return SeedResult(
        state=cert.cycle[res.index],
        word=res.word + prefix,
        escape_length=len(res.word),
        escape_budget=res.budget,
    )


@dataclass(frozen=True)
class GrowResult:
    word: Word
    escape_length: int
    escape_budget: int


def expand_subset(aut: Automaton, cert: OneClusterCertificate, subset: int) -> GrowResult:
    """Word whose preimage of ``subset`` meets the cycle in more states.

    ``subset`` must be a proper sub-part of the cycle with at least two
    states.  The family pushes its balanced vector through all powers
    ``letter^(level + j)`` for ``j`` below ``p``; the prime cycle length
    makes the restricted minimal polynomial ``1 + x + ... + x^(p-1)``,
    which is exactly the statement that those vectors sum to zero.  The
    word is the escape word followed by the chosen power and is no longer
    than ``n + level``.
    """
    size = subset.bit_count()
    if subset & ~cert.cycle_mask:
        raise InvalidSubsetError("subset must lie inside the cycle")
    if not 2 <= size < cert.p:
        raise InvalidSubsetError(
            f"subset size must be in 2..{cert.p - 1}, got {size}")
    base = balanced_vector(subset, cert.p, aut.n)
    prefix_map_word = (cert.letter,) * cert.level
    v = act(aut, prefix_map_word, base)
    items = []
    total = [0] * aut.n
    for j in range(cert.p):
        items.append(((cert.letter,) * (cert.level + j), subset, v))
        for i, e in enumerate(v):
            total[i] += e
        v = act_letter(aut, cert.letter, v)
    family = VectorFamily(
        tuple(FamilyItem(w, s, vec) for w, s, vec in items), not any(total))
    res = expand_step(aut, family, cert.cycle_mask)
    power = cert.level + res.index
    return GrowResult(
        word=res.word + (cert.letter,) * power,
        escape_length=len(res.word),
        escape_budget=res.budget,
    )


@dataclass(frozen=True)
class SynthesisStep:
    """One recorded expansion: seed or grow, with its budget accounting."""

    phase: str  # "seed" | "grow"
    word: Word
    subset_before: int
    subset_after: int
    search_depth_used: int
    search_budget: int
    depth_budget: int


@dataclass(frozen=True)
class SynthesisTrace:
    """Certified synthesis output: steps, reset word and its length bound."""

    certificate: OneClusterCertificate
    steps: tuple[SynthesisStep, ...]
    reset_word: Word
    bound: int


def length_bound(n: int, p: int, level: int) -> int:
    """Guaranteed reset length for cycle length ``p`` and the given level."""
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got p={p}, n={n}")
    if not 0 <= level <= n - p:
        raise ValueError(f"need 0 <= level <= n - p, got level={level}")
    return n - p + 1 + 2 * level + (p - 2) * (n + level)


def worst_level_bound(t: int, n: int) -> int:
    """``length_bound`` maximized over levels, as a function of cycle length.

    Equals ``3n - 3t + 1 + (t - 2)(2n - t)``; on ``1 <= t <= n`` it never
    exceeds ``(n - 1)^2`` and attains it at ``t = n - 1`` and ``t = n``.
    """
    if n < 1 or not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    return 3 * n - 3 * t + 1 + (t - 2) * (2 * n - t)


def synchronize_one_cluster_prime(
        aut: Automaton, cert: OneClusterCertificate) -> SynthesisTrace:
    """Construct a certified reset word of length at most ``length_bound``.

    Hypotheses are checked up front and violations raise distinct errors:
    the certificate letter must really be one-cluster with the stated
    cycle, the cycle length must be prime, and the automaton must be
    synchronizing.  The result word is verified to reset before returning.
    """
    n = aut.n
    if n == 1:
        return SynthesisTrace(cert, (), (), 0)
    fresh = certificate(aut, cert.letter)
    if fresh is None or fresh.cycle != cert.cycle:
        raise NotOneClusterError(
            f"letter {cert.letter} does not certify the stated single cycle")
    if not cert.p_is_prime:
        raise NotPrimeError(f"cycle length {cert.p} is not prime")
    if not aut.is_synchronizing():
        raise NotSynchronizingError("automaton has no reset word")
    p, level, a = cert.p, cert.level, cert.letter
    bound = length_bound(n, p, level)
    seed = expand_singleton(aut, cert)
    subset = cert.cycle_mask & aut.preimage(1 << seed.state, seed.word)
    steps = [SynthesisStep(
        phase="seed",
        word=seed.word,
        subset_before=1 << seed.state,
        subset_after=subset,
        search_depth_used=seed.escape_length,
        search_budget=seed.escape_budget,
        depth_budget=n - p + 1 + level,
    )]
    words = [seed.word]
    while subset.bit_count() < p:
        grow = expand_subset(aut, cert, subset)
        wider = cert.cycle_mask & aut.preimage(subset, grow.word)
        if wider.bit_count() <= subset.bit_count():
            raise BudgetExhaustedError("expansion step failed to grow the subset")
        steps.append(SynthesisStep(
            phase="grow",
            word=grow.word,
            subset_before=subset,
            subset_after=wider,
            search_depth_used=grow.escape_length,
            search_budget=grow.escape_budget,
            depth_budget=n + level,
        ))
        words.append(grow.word)
        subset = wider
    reset = (a,) * level + tuple(x for w in reversed(words) for x in w)
    if not aut.is_reset_word(reset):
        raise BudgetExhaustedError("internal error: constructed word does not reset")
    assert len(reset) <= bound <= (n - 1) ** 2
    return SynthesisTrace(cert, tuple(steps), reset, bound)
