"""Independent baselines: exact shortest reset words and a greedy heuristic.

Both are deliberately separate from the synthesis pipeline so they can
audit it.  The subset search is exact but exponential, hence capped; the
greedy pair merger scales but makes no optimality promise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import Automaton, Word, iter_states, states_of
from .errors import CapExceededError


@dataclass(frozen=True)
class SubsetSearchResult:
    shortest_length: int
    witness: Word
    explored: int


def bfs_shortest_reset(aut: Automaton, cap: int = 20) -> SubsetSearchResult | None:
    """Exact shortest reset word by breadth-first search over subsets.

    Starts from the full state set and applies letters, deduplicating
    subsets; the first singleton hit is provably shortest.  Returns None
    when the automaton is not synchronizing.  Refuses n above ``cap``.
    """
    if aut.n > cap:
        raise CapExceededError(
            f"subset search handles n <= {cap}, got n = {aut.n}")
    full = aut.full_mask
    if full.bit_count() == 1:
        return SubsetSearchResult(0, (), 1)
    maps = [tuple(aut.delta[q][x] for q in range(aut.n)) for x in range(aut.k)]
    parent: dict[int, tuple[int, int] | None] = {full: None}
    queue = deque([full])
    while queue:
        mask = queue.popleft()
        for x, m in enumerate(maps):
            out = 0
            for q in iter_states(mask):
                out |= 1 << m[q]
            if out in parent:
                continue
            parent[out] = (mask, x)
            if out.bit_count() == 1:
                word = []
                cur = out
                while parent[cur] is not None:
                    prev, letter = parent[cur]
                    word.append(letter)
                    cur = prev
                word.reverse()
                return SubsetSearchResult(len(word), tuple(word), len(parent))
            queue.append(out)
    return None


def _pair_merge_steps(aut: Automaton) -> dict[tuple[int, int], int] | None:
    """Per pair, the first letter of a shortest merging word.

    Built once by backward breadth-first search on the pair automaton.
    Returns None as soon as some pair cannot merge, i.e. the automaton is
    not synchronizing.
    """
    n = aut.n
    preds: dict[tuple[int, int], list[tuple[tuple[int, int], int]]] = {}
    step: dict[tuple[int, int], int] = {}
    queue: deque[tuple[int, int]] = deque()
    for q in range(n):
        for r in range(q + 1, n):
            for x in range(aut.k):
                a, b = aut.delta[q][x], aut.delta[r][x]
                if a == b:
                    if (q, r) not in step:
                        step[(q, r)] = x
                        queue.append((q, r))
                else:
                    key = (a, b) if a < b else (b, a)
                    preds.setdefault(key, []).append(((q, r), x))
    while queue:
        pair = queue.popleft()
        for prev, x in preds.get(pair, ()):
            if prev not in step:
                step[prev] = x
                queue.append(prev)
    if len(step) < n * (n - 1) // 2:
        return None
    return step


def greedy_pair_reset(aut: Automaton) -> Word | None:
    """Valid reset word by repeatedly merging the cheapest state pair.

    Precomputes shortest pair-merging words once, then drags the whole
    image set through the merging word of its currently cheapest pair.
    The result is a correct reset word with no optimality guarantee;
    None means the automaton is not synchronizing.
    """
    if aut.n == 1:
        return ()
    step = _pair_merge_steps(aut)
    if step is None:
        return None

    def pair_distance(q: int, r: int) -> int:
        # following ``step`` strictly decreases the merge distance
        d = 0
        while q != r:
            x = step[(q, r) if q < r else (r, q)]
            q, r = aut.delta[q][x], aut.delta[r][x]
            d += 1
        return d

    mask = aut.full_mask
    word: list[int] = []
    while mask.bit_count() > 1:
        states = states_of(mask)
        best: tuple[int, int, int] | None = None
        for i, q in enumerate(states):
            for r in states[i + 1:]:
                d = pair_distance(q, r)
                if best is None or d < best[0]:
                    best = (d, q, r)
        assert best is not None
        _, q, r = best
        while q != r:
            x = step[(q, r) if q < r else (r, q)]
            word.append(x)
            q, r = aut.delta[q][x], aut.delta[r][x]
            out = 0
            for s in iter_states(mask):
                out |= 1 << aut.delta[s][x]
            mask = out
    return tuple(word)
