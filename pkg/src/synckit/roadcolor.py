"""Synchronizing colorings of aperiodic digraphs around a prime cycle.

Given a strongly connected, aperiodic digraph with constant out-degree and
no repeated arc, a simple cycle of prime length ``p < n`` anchors colorings
whose letter 0 is one-cluster with that exact cycle: the other letter-0
arcs form an in-forest flowing into the cycle.  Searching the in-forests
and the assignments of the remaining arcs to letters looks for a
synchronizing coloring, and the prime-cycle synthesis then certifies a
reset word within ``3n - 3p + 1 + (p - 2)(2n - p) <= (n - 1)^2``.

Not every prime cycle works: a cycle can have all of its one-cluster
colorings non-synchronizing while a different prime cycle of the same
digraph succeeds.  :func:`color` searches one prescribed cycle and reports
exhaustion loudly; :func:`color_digraph` tries every prime cycle in
deterministic order and returns the first certificate.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

from .automaton import Automaton
from .errors import (
    CapExceededError,
    ColoringAnomalyError,
    ColoringSearchBudgetError,
    HypothesisError,
    NotPrimeError,
)
from .rng import SplitMix64, derive
from .structure import OneClusterCertificate, certificate, is_prime
from .synthesis import SynthesisTrace, synchronize_one_cluster_prime, worst_level_bound


@dataclass(frozen=True)
class Digraph:
    """Directed graph on ``0..n-1`` as an explicit arc list.

    Parallel arcs are representable so that diagnostics can flag them;
    hypothesis checking lives in :func:`validate`.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one vertex, got n={self.n}")
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        for i, (u, v) in enumerate(arcs):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc {i} = ({u}, {v}) out of range 0..{self.n - 1}")
        object.__setattr__(self, "arcs", arcs)

    def out_arcs(self) -> list[list[tuple[int, int]]]:
        """Per vertex, the (arc index, target) list in input order."""
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.arcs):
            out[u].append((i, v))
        return out

    @property
    def out_degree(self) -> int | None:
        """The constant out-degree, or None when degrees differ."""
        degrees = [0] * self.n
        for u, _ in self.arcs:
            degrees[u] += 1
        return degrees[0] if len(set(degrees)) == 1 else None


@dataclass(frozen=True)
class DigraphDiagnostics:
    """Hypothesis report for the coloring pipeline."""

    n: int
    out_degree: int | None
    constant_out_degree: bool
    no_multiple_arcs: bool
    strongly_connected: bool
    cycle_gcd: int
    aperiodic: bool

    @property
    def ok(self) -> bool:
        return (self.constant_out_degree and self.no_multiple_arcs
                and self.strongly_connected and self.aperiodic)


def _reaches_all(n: int, adj: list[list[int]], start: int) -> bool:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == n


def validate(dg: Digraph) -> DigraphDiagnostics:
    """Check the coloring hypotheses and measure the cycle-length gcd.

    Aperiodicity is measured on a breadth-first layering from vertex 0:
    the gcd of ``level(u) + 1 - level(v)`` over all arcs equals the gcd of
    all cycle lengths when the digraph is strongly connected.
    """
    fwd: list[list[int]] = [[] for _ in range(dg.n)]
    rev: list[list[int]] = [[] for _ in range(dg.n)]
    for u, v in dg.arcs:
        fwd[u].append(v)
        rev[v].append(u)
    strongly = _reaches_all(dg.n, fwd, 0) and _reaches_all(dg.n, rev, 0)
    level = [-1] * dg.n
    level[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in fwd[u]:
            if level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    g = 0
    for u, v in dg.arcs:
        if level[u] >= 0 and level[v] >= 0:
            g = math.gcd(g, level[u] + 1 - level[v])
    return DigraphDiagnostics(
        n=dg.n,
        out_degree=dg.out_degree,
        constant_out_degree=dg.out_degree is not None,
        no_multiple_arcs=len(set(dg.arcs)) == len(dg.arcs),
        strongly_connected=strongly,
        cycle_gcd=g,
        aperiodic=strongly and g == 1,
    )


def iter_prime_cycles(dg: Digraph, cap: int = 1_000_000):
    """All simple cycles of prime length below ``n``, lazily, deduplicated.

    Enumeration is deterministic: prime lengths ascend, each cycle is
    anchored at its least vertex, start vertices ascend and arcs are tried
    in input order.  ``cap`` bounds the total number of search steps
    before CapExceededError.
    """
    adj = [[v for _, v in arcs] for arcs in dg.out_arcs()]
    work = 0

    def bump():
        nonlocal work
        work += 1
        if work > cap:
            raise CapExceededError(f"prime cycle search exceeded {cap} steps")

    for p in range(2, dg.n):
        if not is_prime(p):
            continue
        for start in range(dg.n):
            path = [start]
            on_path = {start}

            def dfs():
                bump()
                u = path[-1]
                if len(path) == p:
                    if start in adj[u]:
                        yield tuple(path)
                    return
                for v in adj[u]:
                    if v > start and v not in on_path:
                        path.append(v)
                        on_path.add(v)
                        yield from dfs()
                        path.pop()
                        on_path.remove(v)

            yield from dfs()


def find_prime_cycle(dg: Digraph, cap: int = 1_000_000) -> tuple[int, ...] | None:
    """First simple cycle of prime length below ``n``, or None.

    "First" in the deterministic order of :func:`iter_prime_cycles`, so
    the smallest prime length wins.
    """
    return next(iter_prime_cycles(dg, cap), None)


@dataclass(frozen=True)
class ColoringCertificate:
    """A synchronizing coloring together with its certified reset word.

    ``arc_letters[i]`` is the letter assigned to ``digraph.arcs[i]``; the
    automaton realizes exactly those arcs, letter 0 is one-cluster with
    the prescribed prime cycle, and ``reset`` certifies a reset word whose
    length is at most ``bound``.
    """

    arc_letters: tuple[int, ...]
    automaton: Automaton
    cert: OneClusterCertificate
    reset: SynthesisTrace
    bound: int


def _rotate_min_first(cycle: tuple[int, ...]) -> tuple[int, ...]:
    j = cycle.index(min(cycle))
    return cycle[j:] + cycle[:j]


def color(dg: Digraph, cycle: tuple[int, ...], *, seed: int = 0,
          budget: int = 500_000, random_tries: int = 50_000) -> ColoringCertificate:
    """Search for a synchronizing coloring anchored on the given cycle.

    Letter 0 is forced along the cycle; every other vertex picks one
    out-arc for letter 0 such that the choices flow into the cycle with no
    new cycle, and the remaining arcs are distributed over letters
    ``1..k-1``.  Candidates are enumerated deterministically, vertices
    ascending and arcs in input order; past ``budget`` candidates the
    search switches to seeded random sampling, and running out of tries
    raises ColoringSearchBudgetError.  A completed enumeration with no
    synchronizing coloring raises ColoringAnomalyError, because the
    hypotheses guarantee one exists.
    """
    diag = validate(dg)
    if not diag.ok:
        failures = []
        if not diag.constant_out_degree:
            failures.append("out-degree is not constant")
        if not diag.no_multiple_arcs:
            failures.append("has a repeated arc")
        if not diag.strongly_connected:
            failures.append("is not strongly connected")
        if not diag.aperiodic:
            failures.append(f"is periodic (cycle gcd {diag.cycle_gcd})")
        raise HypothesisError("digraph " + "; ".join(failures))
    k = diag.out_degree
    n = dg.n
    cycle = _rotate_min_first(tuple(cycle))
    p = len(cycle)
    if len(set(cycle)) != p:
        raise ValueError("cycle must not repeat vertices")
    if not is_prime(p):
        raise NotPrimeError(f"cycle length {p} is not prime")
    if p >= n:
        raise ValueError(f"cycle must be proper: p={p}, n={n}")
    out = dg.out_arcs()
    cycle_pos = {u: i for i, u in enumerate(cycle)}
    forced: dict[int, int] = {}
    for i, u in enumerate(cycle):
        nxt = cycle[(i + 1) % p]
        hits = [aid for aid, v in out[u] if v == nxt]
        if not hits:
            raise ValueError(f"({u}, {nxt}) is not an arc of the digraph")
        forced[u] = hits[0]
    noncycle = [u for u in range(n) if u not in cycle_pos]

    def try_candidate(zero_arc: dict[int, int]) -> ColoringCertificate | None:
        # zero_arc maps each vertex to its letter-0 arc index
        target0 = [0] * n
        for u in range(n):
            target0[u] = dg.arcs[zero_arc[u]][1]
        # every vertex off the cycle must flow into the cycle, no new cycle
        state = [0] * n  # 0 unknown, 1 reaches cycle
        for u in cycle:
            state[u] = 1
        for u in noncycle:
            trail = []
            w = u
            while state[w] == 0 and w not in trail:
                trail.append(w)
                w = target0[w]
            if state[w] != 1:
                return None
            for t in trail:
                state[t] = 1
        rest = [[aid for aid, _ in out[u] if aid != zero_arc[u]] for u in range(n)]
        for perm_choice in itertools.product(
                *[itertools.permutations(rest[u]) for u in range(n)]):
            arc_letters = [0] * len(dg.arcs)
            delta = [[0] * k for _ in range(n)]
            for u in range(n):
                delta[u][0] = target0[u]
                for j, aid in enumerate(perm_choice[u], start=1):
                    delta[u][j] = dg.arcs[aid][1]
                    arc_letters[aid] = j
            aut = Automaton(n, k, tuple(tuple(row) for row in delta))
            if aut.is_synchronizing():
                cert = certificate(aut, 0)
                assert cert is not None and set(cert.cycle) == set(cycle)
                trace = synchronize_one_cluster_prime(aut, cert)
                bound = worst_level_bound(p, n)
                assert len(trace.reset_word) <= bound
                return ColoringCertificate(
                    arc_letters=tuple(arc_letters),
                    automaton=aut,
                    cert=cert,
                    reset=trace,
                    bound=bound,
                )
        return None

    examined = 0
    overflow = False
    for picks in itertools.product(*[range(len(out[u])) for u in noncycle]):
        inner = math.prod(
            math.factorial(len(out[u]) - 1) for u in range(n)) or 1
        examined += inner
        if examined > budget:
            overflow = True
            break
        zero_arc = dict(forced)
        for u, pick in zip(noncycle, picks):
            zero_arc[u] = out[u][pick][0]
        found = try_candidate(zero_arc)
        if found:
            return found
    if not overflow:
        raise ColoringAnomalyError(
            "exhaustive search found no synchronizing coloring anchored on "
            f"cycle {cycle}; another prime cycle of this digraph may still "
            "admit one")
    rng = SplitMix64(derive(seed, 0xC0102))
    for _ in range(random_tries):
        zero_arc = dict(forced)
        for u in noncycle:
            zero_arc[u] = rng.choice(out[u])[0]
        found = try_candidate(zero_arc)
        if found:
            return found
    raise ColoringSearchBudgetError(
        f"no synchronizing coloring within budget {budget} + {random_tries} tries")


def color_digraph(dg: Digraph, *, seed: int = 0, budget: int = 500_000,
                  random_tries: int = 50_000,
                  cycle_cap: int = 1_000_000) -> ColoringCertificate:
    """Certificate anchored on the first prime cycle that admits one.

    A fixed prime cycle can fail: some digraphs have a prime cycle whose
    every one-cluster coloring is non-synchronizing, even though another
    prime cycle of the same digraph works.  This driver walks the cycles
    of :func:`iter_prime_cycles` in order and returns the first success.

    Raises HypothesisError when no proper prime cycle exists at all,
    ColoringAnomalyError when every cycle was exhausted deterministically
    (no synchronizing one-cluster coloring anchored on any prime cycle),
    and ColoringSearchBudgetError when at least one cycle was left
    undecided by its work budget.
    """
    tried = 0
    undecided = False
    for cycle in iter_prime_cycles(dg, cycle_cap):
        tried += 1
        try:
            return color(dg, cycle, seed=seed, budget=budget,
                         random_tries=random_tries)
        except ColoringAnomalyError:
            continue
        except ColoringSearchBudgetError:
            undecided = True
            continue
    if tried == 0:
        raise HypothesisError(
            "digraph has no simple cycle of prime length below n")
    if undecided:
        raise ColoringSearchBudgetError(
            f"no coloring found over {tried} prime cycles and at least one "
            "search ended on its work budget")
    raise ColoringAnomalyError(
        f"all {tried} prime cycles were exhausted with no synchronizing "
        "one-cluster coloring; this contradicts the guarantee for "
        "aperiodic digraphs")
