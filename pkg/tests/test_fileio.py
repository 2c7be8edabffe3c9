"""Text formats for automata, digraphs and words, plus DOT export."""

import pytest
from hypothesis import given, strategies as st

from synckit.automaton import Automaton
from synckit.errors import MalformedTransitionError
from synckit.fileio import (
    format_word,
    parse_automaton,
    parse_digraph,
    parse_word,
    serialize_automaton,
    serialize_digraph,
    skeleton_dot,
)
from synckit.generators import cerny, random_digraph
from synckit.roadcolor import Digraph


class TestWordFormat:
    def test_letters_for_small_alphabets(self):
        assert format_word((1, 0, 0, 1), 2) == "baab"
        assert format_word((), 2) == ""

    def test_indices_for_large_alphabets(self):
        assert format_word((0, 27, 3), 30) == "0.27.3"

    def test_parse_letters(self):
        assert parse_word("baab", 2) == (1, 0, 0, 1)
        assert parse_word("", 2) == ()
        assert parse_word("  ab ", 2) == (0, 1)

    def test_parse_indices(self):
        assert parse_word("0.27.3", 30) == (0, 27, 3)

    def test_parse_rejects_out_of_alphabet(self):
        with pytest.raises(ValueError):
            parse_word("abc", 2)
        with pytest.raises(ValueError):
            parse_word("0.5", 3)

    @given(st.integers(1, 26), st.lists(st.integers(0, 25), max_size=12))
    def test_round_trip(self, k, raw):
        word = tuple(x % k for x in raw)
        assert parse_word(format_word(word, k), k) == word


class TestAutomatonFormat:
    def test_serialize_example(self, c3):
        assert serialize_automaton(c3) == "AUT 3 2\n1 1\n2 1\n0 2\n"

    def test_round_trip(self, c3, c5, deep_tail):
        for aut in (c3, c5, deep_tail, cerny(1)):
            again = parse_automaton(serialize_automaton(aut))
            assert again.n == aut.n and again.k == aut.k
            assert again.delta == aut.delta

    def test_comments_and_blank_lines_are_skipped(self):
        text = """
        # classic three-state example
        AUT 3 2

        1 1   # state 0
        2 1
        0 2   # wraps around
        """
        assert parse_automaton(text).delta == cerny(3).delta

    def test_empty_file(self):
        with pytest.raises(ValueError, match="empty"):
            parse_automaton("# nothing here\n")

    def test_bad_header_names_line(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_automaton("FSM 3 2\n")

    def test_row_count_mismatch(self):
        with pytest.raises(ValueError, match="3 transition rows"):
            parse_automaton("AUT 3 2\n1 1\n2 1\n")

    def test_row_width_mismatch_names_line(self):
        with pytest.raises(ValueError, match="line 3"):
            parse_automaton("AUT 2 2\n1 1\n0\n")

    def test_non_integer_target(self):
        with pytest.raises(ValueError):
            parse_automaton("AUT 1 1\nx\n")

    def test_out_of_range_target_fails_validation(self):
        with pytest.raises(MalformedTransitionError):
            parse_automaton("AUT 2 1\n1\n9\n")


class TestDigraphFormat:
    def test_round_trip(self):
        dg = random_digraph(6, 2, seed=1)
        again = parse_digraph(serialize_digraph(dg))
        assert again.n == dg.n and again.arcs == dg.arcs

    def test_serialize_rejects_uneven_degrees(self):
        with pytest.raises(ValueError, match="evenly"):
            serialize_digraph(Digraph(2, ((0, 1), (0, 0), (1, 0))))

    def test_parse_arc_count_mismatch(self):
        with pytest.raises(ValueError, match="expected 4 arcs"):
            parse_digraph("DIG 2 2\n0 1\n1 0\n")

    def test_parse_bad_arc_line(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_digraph("DIG 1 1\n0 0 0\n")

    def test_bad_header(self):
        with pytest.raises(ValueError, match="header"):
            parse_digraph("AUT 2 2\n")


class TestDotExport:
    def test_frozen_output(self, c3):
        assert skeleton_dot(c3, 1) == (
            'digraph "letter_b" {\n'
            "  rankdir=LR;\n"
            "  0 -> 1;\n"
            "  1 -> 1;\n"
            "  2 -> 2;\n"
            "}\n")

    def test_letter_out_of_range(self, c3):
        with pytest.raises(ValueError):
            skeleton_dot(c3, 2)

    def test_every_state_appears(self, deep_tail):
        dot = skeleton_dot(deep_tail, 0)
        for q in range(deep_tail.n):
            assert f"  {q} -> {deep_tail.delta[q][0]};" in dot
