"""Line-oriented text formats for automata and digraphs, plus DOT export.

Automaton files:  a header ``AUT n k`` followed by n rows of k target
states, one row per state.  Digraph files: a header ``DIG n k`` followed
by ``n * k`` arc lines ``u v``.  ``#`` starts a comment anywhere on a
line and blank lines are skipped; both formats are diff-friendly.
"""

from __future__ import annotations

from .automaton import Automaton, Word
from .roadcolor import Digraph

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def format_word(word: Word, k: int) -> str:
    """Word as letters ``a..z`` when the alphabet allows, else indices."""
    if k <= len(_LETTERS):
        return "".join(_LETTERS[x] for x in word)
    return ".".join(str(x) for x in word)


def parse_word(text: str, k: int) -> Word:
    """Inverse of format_word; accepts letters or dot-separated indices."""
    text = text.strip()
    if not text:
        return ()
    if all(c in _LETTERS for c in text):
        word = tuple(_LETTERS.index(c) for c in text)
    else:
        word = tuple(int(tok) for tok in text.replace(".", " ").split())
    for x in word:
        if not 0 <= x < k:
            raise ValueError(f"letter {x} outside alphabet of size {k}")
    return word


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((ln, body.split()))
    return out


def serialize_automaton(aut: Automaton) -> str:
    lines = [f"AUT {aut.n} {aut.k}"]
    for row in aut.delta:
        lines.append(" ".join(str(t) for t in row))
    return "\n".join(lines) + "\n"


def parse_automaton(text: str) -> Automaton:
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty automaton file")
    ln, head = lines[0]
    if len(head) != 3 or head[0] != "AUT":
        raise ValueError(f"line {ln}: expected header 'AUT n k'")
    n, k = int(head[1]), int(head[2])
    rows = lines[1:]
    if len(rows) != n:
        raise ValueError(f"expected {n} transition rows, found {len(rows)}")
    delta = []
    for ln, toks in rows:
        if len(toks) != k:
            raise ValueError(f"line {ln}: expected {k} targets, found {len(toks)}")
        delta.append(tuple(int(t) for t in toks))
    return Automaton(n, k, tuple(delta))


def serialize_digraph(dg: Digraph) -> str:
    if len(dg.arcs) % dg.n:
        raise ValueError("digraph arcs do not divide evenly; cannot declare k")
    lines = [f"DIG {dg.n} {len(dg.arcs) // dg.n}"]
    for u, v in dg.arcs:
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty digraph file")
    ln, head = lines[0]
    if len(head) != 3 or head[0] != "DIG":
        raise ValueError(f"line {ln}: expected header 'DIG n k'")
    n, k = int(head[1]), int(head[2])
    arcs = []
    for ln, toks in lines[1:]:
        if len(toks) != 2:
            raise ValueError(f"line {ln}: expected an arc 'u v'")
        arcs.append((int(toks[0]), int(toks[1])))
    if len(arcs) != n * k:
        raise ValueError(f"expected {n * k} arcs, found {len(arcs)}")
    return Digraph(n, tuple(arcs))


def skeleton_dot(aut: Automaton, letter: int) -> str:
    """GraphViz source for one letter's functional graph."""
    if not 0 <= letter < aut.k:
        raise ValueError(f"letter {letter} outside alphabet of size {aut.k}")
    label = format_word((letter,), aut.k)
    lines = [f'digraph "letter_{label}" {{', "  rankdir=LR;"]
    for q in range(aut.n):
        lines.append(f"  {q} -> {aut.delta[q][letter]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
