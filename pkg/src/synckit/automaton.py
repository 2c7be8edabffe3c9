"""Deterministic finite automata over dense integer states and letters.

States are ``0..n-1`` and letters ``0..k-1``.  A word is a tuple of letter
indices applied left to right, so ``q * (uv) = (q * u) * v`` and the empty
word is the identity.  State sets travel as int bitmasks; Python ints grow
without bound, which keeps subset images, preimages and visited-set
bookkeeping exact at any ``n``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import MalformedTransitionError

Word = tuple[int, ...]

EMPTY_WORD: Word = ()


def mask_from(states: Iterable[int]) -> int:
    """Bitmask holding a collection of states."""
    m = 0
    for q in states:
        m |= 1 << q
    return m


def states_of(mask: int) -> tuple[int, ...]:
    """States of a bitmask, ascending."""
    return tuple(iter_states(mask))


def iter_states(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Automaton:
    """Total deterministic transition table; ``delta[q][x]`` is ``q * x``.

    Instances are immutable after construction and safe to share across
    threads.  Construction validates the table shape and every entry,
    naming the offending row and column on failure.
    """

    n: int
    k: int
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise MalformedTransitionError(f"need at least one state, got n={self.n}")
        if self.k < 1:
            raise MalformedTransitionError(f"need at least one letter, got k={self.k}")
        rows = tuple(tuple(row) for row in self.delta)
        if len(rows) != self.n:
            raise MalformedTransitionError(
                f"transition table has {len(rows)} rows, expected n={self.n}")
        for q, row in enumerate(rows):
            if len(row) != self.k:
                raise MalformedTransitionError(
                    f"row {q} has {len(row)} entries, expected k={self.k}", row=q)
            for x, target in enumerate(row):
                if not isinstance(target, int) or not 0 <= target < self.n:
                    raise MalformedTransitionError(
                        f"delta[{q}][{x}] = {target!r} is not a state in 0..{self.n - 1}",
                        row=q, column=x)
        object.__setattr__(self, "delta", rows)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def apply(self, q: int, word: Iterable[int]) -> int:
        """State reached from ``q`` by reading ``word`` left to right."""
        for x in word:
            q = self.delta[q][x]
        return q

    def state_map(self, word: Iterable[int]) -> tuple[int, ...]:
        """The transformation of the full state set induced by ``word``."""
        m = list(range(self.n))
        for x in word:
            m = [self.delta[q][x] for q in m]
        return tuple(m)

    def image(self, mask: int, word: Iterable[int]) -> int:
        m = self.state_map(word)
        out = 0
        for q in iter_states(mask):
            out |= 1 << m[q]
        return out

    def preimage(self, mask: int, word: Iterable[int]) -> int:
        """States whose ``word``-image lands inside ``mask``."""
        m = self.state_map(word)
        out = 0
        for q in range(self.n):
            if (mask >> m[q]) & 1:
                out |= 1 << q
        return out

    def is_reset_word(self, word: Iterable[int]) -> bool:
        return self.image(self.full_mask, word).bit_count() == 1

    def is_synchronizing(self) -> bool:
        """Whether some word resets the automaton.

        Uses backward reachability on the pair automaton: the automaton is
        synchronizing iff every unordered state pair can reach a merged
        pair, searched here from the merged pairs along reversed moves.
        """
        n = self.n
        if n == 1:
            return True
        preds: dict[tuple[int, int], list[tuple[int, int]]] = {}
        seeds: list[tuple[int, int]] = []
        for q in range(n):
            for r in range(q + 1, n):
                for x in range(self.k):
                    a, b = self.delta[q][x], self.delta[r][x]
                    if a == b:
                        seeds.append((q, r))
                        break
                    key = (a, b) if a < b else (b, a)
                    preds.setdefault(key, []).append((q, r))
        mergeable = set(seeds)
        queue = deque(seeds)
        while queue:
            pair = queue.popleft()
            for prev in preds.get(pair, ()):
                if prev not in mergeable:
                    mergeable.add(prev)
                    queue.append(prev)
        return len(mergeable) == n * (n - 1) // 2
