"""Seeded instance generators: the classic hard family and random instances.

All randomness flows through SplitMix64 (see rng.py), so a 64-bit seed
pins every instance bit for bit; rejection resampling derives one child
seed per attempt, keeping acceptance order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Automaton
from .errors import GenerationError
from .rng import SplitMix64, derive
from .roadcolor import Digraph, find_prime_cycle, validate
from .structure import certificate, is_prime


def cerny(n: int) -> Automaton:
    """The classic slow family: a rotation plus a letter nudging state 0.

    Letter 0 maps ``i`` to ``i + 1 mod n``; letter 1 sends 0 to 1 and fixes
    everything else.  Its shortest reset word has length ``(n - 1)^2``.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rows = []
    for q in range(n):
        rot = (q + 1) % n
        nudge = 1 % n if q == 0 else q
        rows.append((rot, nudge))
    return Automaton(n, 2, tuple(rows))


@dataclass(frozen=True)
class GeneratorSpec:
    """Seed-determined recipe for one generated instance."""

    kind: str  # "cerny" | "one-cluster" | "digraph"
    n: int
    k: int = 2
    p: int | None = None
    level: int | None = None
    seed: int = 0


def random_one_cluster(n: int, p: int, level: int, *, k: int = 2, seed: int = 0,
                       attempts: int = 500) -> Automaton:
    """Random synchronizing automaton whose letter 0 is one-cluster.

    Letter 0 is built as a ``p``-cycle with attached tails realizing
    exactly the requested level; the remaining letters are uniform random
    maps.  Candidates are resampled (one derived seed per attempt) until
    synchronizing; GenerationError reports a hit attempt cap.

    A positive level needs at least one tail state, so ``level == 0``
    requires ``n == p`` and otherwise ``1 <= level <= n - p``.
    """
    if not is_prime(p):
        raise ValueError(f"cycle length must be prime, got {p}")
    if p > n:
        raise ValueError(f"need p <= n, got p={p}, n={n}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if n == p:
        if level != 0:
            raise ValueError(f"level must be 0 when n == p, got {level}")
    elif not 1 <= level <= n - p:
        raise ValueError(f"need 1 <= level <= n - p = {n - p}, got {level}")
    for attempt in range(attempts):
        rng = SplitMix64(derive(seed, attempt))
        f = [(i + 1) % p for i in range(p)] + [0] * (n - p)
        depth = [0] * n
        if level:
            # one chain pins the level exactly; extras attach anywhere shallower
            prev = rng.below(p)
            for j in range(level):
                s = p + j
                f[s] = prev
                depth[s] = j + 1
                prev = s
            for s in range(p + level, n):
                parent = rng.choice([t for t in range(s) if depth[t] < level])
                f[s] = parent
                depth[s] = depth[parent] + 1
        perm = list(range(n))
        rng.shuffle(perm)
        rows = [[0] * k for _ in range(n)]
        for q in range(n):
            rows[perm[q]][0] = perm[f[q]]
        for q in range(n):
            for x in range(1, k):
                rows[q][x] = rng.below(n)
        aut = Automaton(n, k, tuple(tuple(r) for r in rows))
        if aut.is_synchronizing():
            cert = certificate(aut, 0)
            assert cert is not None and cert.p == p and cert.level == level
            return aut
    raise GenerationError(
        f"no synchronizing instance in {attempts} attempts for "
        f"n={n}, p={p}, level={level}, k={k}, seed={seed}")


def random_digraph(n: int, k: int = 2, *, seed: int = 0,
                   attempts: int = 5000) -> Digraph:
    """Random digraph satisfying every coloring hypothesis.

    Each vertex gets ``k`` distinct out-neighbors; candidates are
    resampled until strongly connected and aperiodic with a simple cycle
    of prime length below ``n``.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    for attempt in range(attempts):
        rng = SplitMix64(derive(seed, attempt))
        arcs = []
        for u in range(n):
            pool = list(range(n))
            rng.shuffle(pool)
            for v in sorted(pool[:k]):
                arcs.append((u, v))
        dg = Digraph(n, tuple(arcs))
        if not validate(dg).ok:
            continue
        if find_prime_cycle(dg) is None:
            continue
        return dg
    raise GenerationError(
        f"no suitable digraph in {attempts} attempts for n={n}, k={k}, seed={seed}")


def generate(spec: GeneratorSpec) -> Automaton | Digraph:
    """Dispatch a GeneratorSpec to its generator."""
    if spec.kind == "cerny":
        return cerny(spec.n)
    if spec.kind == "one-cluster":
        if spec.p is None or spec.level is None:
            raise ValueError("one-cluster generation needs p and level")
        return random_one_cluster(
            spec.n, spec.p, spec.level, k=spec.k, seed=spec.seed)
    if spec.kind == "digraph":
        return random_digraph(spec.n, spec.k, seed=spec.seed)
    raise ValueError(f"unknown generator kind {spec.kind!r}")
