"""Shared fixtures, strategies and the acceptance reporting hook."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from synckit.automaton import Automaton
from synckit.generators import cerny


# --- fixtures ---------------------------------------------------------

@pytest.fixture(scope="session")
def c3():
    return cerny(3)


@pytest.fixture(scope="session")
def c4():
    return cerny(4)


@pytest.fixture(scope="session")
def c5():
    return cerny(5)


# Letter 0 is a 5-cycle on 0..4 with three tails of depths up to 3 hanging
# off it; letter 1 is the identity.  Exercises level and depth handling on
# something bushier than the classic family.
_DEEP_TAIL_EDGES = {
    0: 1, 1: 2, 2: 3, 3: 4, 4: 0,
    5: 0, 6: 5, 7: 6, 8: 6, 9: 5, 10: 9, 11: 9,
    12: 1, 13: 2, 14: 13,
}

DEEP_TAIL_DEPTHS = (0, 0, 0, 0, 0, 1, 2, 3, 3, 2, 3, 3, 1, 1, 2)


@pytest.fixture(scope="session")
def deep_tail():
    rows = tuple((_DEEP_TAIL_EDGES[q], q) for q in range(15))
    return Automaton(15, 2, rows)


@pytest.fixture(scope="session")
def swap_toy():
    # letter 0 swaps the two states, letter 1 fixes them: nothing merges
    return Automaton(2, 2, ((1, 0), (0, 1)))


# --- hypothesis strategies --------------------------------------------

@st.composite
def automata(draw, min_n=1, max_n=8, min_k=1, max_k=3):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(min_k, max_k))
    delta = tuple(
        tuple(draw(st.integers(0, n - 1)) for _ in range(k))
        for _ in range(n))
    return Automaton(n, k, delta)


@st.composite
def automata_with_words(draw, max_n=8, max_k=3, max_len=6):
    aut = draw(automata(max_n=max_n, max_k=max_k))
    word = tuple(draw(st.lists(
        st.integers(0, aut.k - 1), max_size=max_len)))
    return aut, word


# --- acceptance criterion reporting -----------------------------------

_ACCEPTANCE: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(name): end-to-end acceptance criterion, reported "
        "pass/fail in the terminal summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    name = marker.args[0] if marker.args else item.name
    if report.when == "call":
        _ACCEPTANCE[name] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        _ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE.items():
        tag = {"passed": "PASS", "skipped": "SKIP"}.get(outcome, "FAIL")
        terminalreporter.write_line(f"[{tag}] {name}")
