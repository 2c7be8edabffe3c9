"""Exact integer linear algebra for word actions on balanced vectors.

Everything here is integer or rational arithmetic with no rounding.  The
central object is the balanced vector of a subset ``S`` against a cycle of
length ``p``: the characteristic column of ``S`` minus ``|S|/p`` times the
all-ones column.  To stay in integers the whole vector is scaled by ``p``,
which changes no span, no zero test and no sign anywhere downstream.

Words act by gathering: ``(w . v)[q] = v[q * w]``.  Summing an acted
balanced vector over the cycle ``C`` yields exactly

    p * (|C intersect preimage(S, w)| - |S|)

so subset growth under preimages can be read off as a sign, with no
floating point in sight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .automaton import Automaton, Word, iter_states
from .errors import NotInvariantError

IntVector = tuple[int, ...]


def balanced_vector(subset: int, p: int, n: int) -> IntVector:
    """Cycle-balanced vector of a subset, scaled by the cycle length ``p``.

    Entries are ``p - |S|`` on members of ``S`` and ``-|S|`` elsewhere.
    The empty subset gives the zero vector.
    """
    size = subset.bit_count()
    return tuple(p - size if (subset >> q) & 1 else -size for q in range(n))


def act(aut: Automaton, word: Word, v: Sequence[int]) -> IntVector:
    """Word action by gathering: result ``q`` holds ``v[q * word]``."""
    m = aut.state_map(word)
    return tuple(v[m[q]] for q in range(aut.n))


def act_letter(aut: Automaton, letter: int, v: Sequence[int]) -> IntVector:
    return tuple(v[aut.delta[q][letter]] for q in range(aut.n))


def cycle_pairing(cycle_mask: int, v: Sequence[int]) -> int:
    """Sum of ``v`` over the cycle states."""
    return sum(v[q] for q in iter_states(cycle_mask))


def _primitive(v: Sequence[int]) -> IntVector:
    """Divide out the content and make the leading nonzero entry positive."""
    g = 0
    for e in v:
        g = math.gcd(g, e)
    if g == 0:
        return tuple(v)
    for e in v:
        if e:
            if e < 0:
                g = -g
            break
    return tuple(e // g for e in v)


@dataclass(frozen=True)
class Basis:
    """Echelonized primitive integer rows with exact membership tests.

    Rows are kept in ascending pivot-column order, each divided by its
    content with a positive leading entry.  Reduction is fraction-free
    cross-multiplication, so no rationals ever appear.  Instances are
    immutable; ``insert`` returns a new basis.
    """

    rows: tuple[IntVector, ...] = ()
    pivots: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[int]) -> IntVector:
        """Forward-reduce ``v``; the result is zero iff ``v`` is in the span."""
        r = list(v)
        for row, pc in zip(self.rows, self.pivots):
            if r[pc]:
                a, b = row[pc], r[pc]
                r = [a * ri - b * wi for ri, wi in zip(r, row)]
                if any(r):
                    r = list(_primitive(r))
        return _primitive(r)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def insert(self, v: Sequence[int]) -> tuple["Basis", bool]:
        """Basis extended by ``v`` plus whether the dimension grew."""
        r = self.reduce(v)
        if not any(r):
            return self, False
        pc = next(i for i, e in enumerate(r) if e)
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < pc:
            pos += 1
        return Basis(
            self.rows[:pos] + (r,) + self.rows[pos:],
            self.pivots[:pos] + (pc,) + self.pivots[pos:],
        ), True


def span(vectors: Iterable[Sequence[int]]) -> Basis:
    basis = Basis()
    for v in vectors:
        basis, _ = basis.insert(v)
    return basis


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients listed lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (0,)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        if self.coefficients == (0,):
            return -1
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        if self.coefficients == (0,):
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
                parts.append(term if c > 0 else f"-{term}")
        out = " + ".join(parts).replace("+ -", "- ")
        return out


# Polynomial helpers over Fraction lists, lowest degree first.

def _ptrim(f: list[Fraction]) -> list[Fraction]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return _ptrim(out)


def _pdivmod(f: list[Fraction], g: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(f)
    quo = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    while len(rem) >= len(g) and _ptrim(rem):
        shift = len(rem) - len(g)
        factor = rem[-1] / g[-1]
        quo[shift] = factor
        for i, b in enumerate(g):
            rem[shift + i] -= factor * b
        _ptrim(rem)
    return _ptrim(quo), rem


def _pmonic(f: list[Fraction]) -> list[Fraction]:
    lead = f[-1]
    return [c / lead for c in f]


def _pgcd(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    a, b = list(f), list(g)
    while _ptrim(b):
        _, r = _pdivmod(a, b)
        a, b = b, r
    return _pmonic(a)


def _plcm(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    quo, rem = _pdivmod(_pmul(f, g), _pgcd(f, g))
    assert not rem
    return _pmonic(quo)


def solve_exact(columns: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    """Rational coefficients expressing ``target`` in ``columns``, or None.

    Free variables, when the columns are dependent, are set to zero.
    """
    n = len(target)
    m = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(m)] + [Fraction(target[i])]
           for i in range(n)]
    pivots: list[int] = []
    row = 0
    for col in range(m):
        pr = next((i for i in range(row, n) if aug[i][col] != 0), None)
        if pr is None:
            continue
        aug[row], aug[pr] = aug[pr], aug[row]
        pv = aug[row][col]
        aug[row] = [e / pv for e in aug[row]]
        for i in range(n):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [e - f * pe for e, pe in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    for i in range(row, n):
        if aug[i][m] != 0:
            return None
    coeffs = [Fraction(0)] * m
    for r, col in enumerate(pivots):
        coeffs[col] = aug[r][m]
    return coeffs


def kernel_basis(rows: Sequence[Sequence[int]], n: int) -> list[IntVector]:
    """Primitive integer basis of the right kernel of a stack of rows.

    Deterministic: reduced row echelon form over rationals, one kernel
    vector per free column in ascending column order, denominators cleared.
    """
    mat = [[Fraction(e) for e in row] for row in rows if any(row)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [e / pv for e in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [e - f * pe for e, pe in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    pivot_set = set(pivots)
    out: list[IntVector] = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -mat[ri][free]
        den = 1
        for e in v:
            den = math.lcm(den, e.denominator)
        out.append(_primitive([int(e * den) for e in v]))
    return out


def fixed_space(aut: Automaton, letter: int) -> Basis:
    """Exact solution space of ``v[q * letter] == v[q]`` for all ``q``.

    Computed as the kernel of (gather map minus identity).  For a
    one-cluster letter this is exactly the span of the all-ones vector;
    in general its dimension equals the number of cycles of the letter.
    """
    n = aut.n
    rows = []
    for q in range(n):
        t = aut.delta[q][letter]
        if t == q:
            continue
        row = [0] * n
        row[t] += 1
        row[q] -= 1
        rows.append(row)
    return span(kernel_basis(rows, n))


def minimal_poly_on(aut: Automaton, letter: int, basis: Basis) -> IntPolynomial:
    """Minimal polynomial of the letter's action restricted to ``basis``.

    The subspace must be invariant under the letter; a generator that
    escapes raises NotInvariantError naming it.  Per generator the least
    Krylov dependence gives a relative minimal polynomial, and the result
    is the least common multiple over all generators.  The empty basis
    yields the constant polynomial 1.
    """
    if basis.dim == 0:
        return IntPolynomial((1,))
    for idx, g in enumerate(basis.rows):
        if not basis.contains(act_letter(aut, letter, g)):
            raise NotInvariantError(
                f"basis generator {idx} escapes the span under letter {letter}")
    result = [Fraction(1)]
    for g in basis.rows:
        iterates: list[IntVector] = [tuple(g)]
        seen = span([g])
        while True:
            nxt = act_letter(aut, letter, iterates[-1])
            if seen.contains(nxt):
                break
            seen, _ = seen.insert(nxt)
            iterates.append(nxt)
        coeffs = solve_exact(iterates, nxt)
        assert coeffs is not None
        relative = [-c for c in coeffs] + [Fraction(1)]
        result = _plcm(result, relative)
    ints = []
    for c in result:
        assert c.denominator == 1, "minimal polynomial of an integer gather map is integral"
        ints.append(int(c))
    return IntPolynomial(tuple(ints))
