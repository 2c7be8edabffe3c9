"""One-cluster structure of a letter: cycles, tail depths, level.

A letter acts on states as a functional graph, a disjoint union of cycles
with in-trees hanging off them.  A letter is one-cluster when that graph
has a single cycle ``C``; its level is the least power of the letter that
maps every state into ``C``, which equals the deepest tail.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import isqrt

from .automaton import Automaton, mask_from


def is_prime(m: int) -> bool:
    """Primality by trial division; fine at the sizes this package meets."""
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    for d in range(3, isqrt(m) + 1, 2):
        if m % d == 0:
            return False
    return True


def functional_cycles(aut: Automaton, letter: int) -> list[tuple[int, ...]]:
    """All cycles of the letter's functional graph.

    Each cycle is reported as an orbit in action order rotated to start at
    its least state; the list is sorted by that least state.
    """
    n = aut.n
    f = [aut.delta[q][letter] for q in range(n)]
    color = [0] * n  # 0 new, 1 on current walk, 2 finished
    cycles = []
    for s in range(n):
        if color[s]:
            continue
        path = []
        q = s
        while color[q] == 0:
            color[q] = 1
            path.append(q)
            q = f[q]
        if color[q] == 1:
            cyc = path[path.index(q):]
            j = cyc.index(min(cyc))
            cycles.append(tuple(cyc[j:] + cyc[:j]))
        for v in path:
            color[v] = 2
    cycles.sort(key=lambda c: c[0])
    return cycles


@dataclass(frozen=True)
class OneClusterCertificate:
    """Witness that a letter has a single cycle, with its measured level.

    ``cycle`` lists the orbit in action order starting at its least state,
    ``tail_depth[q]`` is the distance from ``q`` to the cycle along the
    letter, and ``level`` is the maximum tail depth: the least power of the
    letter whose image of the full state set lies inside the cycle.
    """

    letter: int
    cycle: tuple[int, ...]
    level: int
    p: int
    p_is_prime: bool
    tail_depth: tuple[int, ...]

    @property
    def cycle_mask(self) -> int:
        return mask_from(self.cycle)


def certificate(aut: Automaton, letter: int) -> OneClusterCertificate | None:
    """One-cluster certificate for ``letter``, or None if it has 2+ cycles."""
    cycles = functional_cycles(aut, letter)
    if len(cycles) != 1:
        return None
    cycle = cycles[0]
    n = aut.n
    f = [aut.delta[q][letter] for q in range(n)]
    preds: list[list[int]] = [[] for _ in range(n)]
    for q in range(n):
        preds[f[q]].append(q)
    depth = [-1] * n
    queue = deque(cycle)
    for q in cycle:
        depth[q] = 0
    while queue:
        t = queue.popleft()
        for q in preds[t]:
            if depth[q] < 0:
                depth[q] = depth[t] + 1
                queue.append(q)
    level = max(depth)
    p = len(cycle)
    return OneClusterCertificate(
        letter=letter,
        cycle=cycle,
        level=level,
        p=p,
        p_is_prime=is_prime(p),
        tail_depth=tuple(depth),
    )


def find_one_cluster_letters(aut: Automaton) -> list[OneClusterCertificate]:
    """Certificates for every one-cluster letter, in letter order."""
    out = []
    for x in range(aut.k):
        cert = certificate(aut, x)
        if cert is not None:
            out.append(cert)
    return out


def preferred_certificate(aut: Automaton) -> OneClusterCertificate | None:
    """First one-cluster certificate with a prime cycle, if any."""
    for cert in find_one_cluster_letters(aut):
        if cert.p_is_prime:
            return cert
    return None
