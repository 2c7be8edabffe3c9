"""Transition table validation, word application, images and preimages."""

import pytest
from hypothesis import given, strategies as st

from synckit.automaton import Automaton, mask_from, states_of
from synckit.errors import MalformedTransitionError

from conftest import automata_with_words


class TestConstruction:
    def test_accepts_well_formed_table(self):
        aut = Automaton(2, 2, ((1, 0), (0, 1)))
        assert aut.n == 2 and aut.k == 2
        assert aut.delta == ((1, 0), (0, 1))

    def test_rejects_nonpositive_n(self):
        with pytest.raises(MalformedTransitionError):
            Automaton(0, 1, ())

    def test_rejects_nonpositive_k(self):
        with pytest.raises(MalformedTransitionError):
            Automaton(1, 0, ((),))

    def test_rejects_wrong_row_count(self):
        with pytest.raises(MalformedTransitionError, match="2 rows"):
            Automaton(3, 1, ((0,), (1,)))

    def test_short_row_names_the_row(self):
        with pytest.raises(MalformedTransitionError, match="row 1") as exc:
            Automaton(2, 2, ((0, 1), (0,)))
        assert exc.value.row == 1
        assert exc.value.column is None

    def test_out_of_range_entry_names_row_and_column(self):
        with pytest.raises(MalformedTransitionError) as exc:
            Automaton(2, 2, ((0, 1), (0, 2)))
        assert exc.value.row == 1
        assert exc.value.column == 1

    def test_rejects_non_integer_entry(self):
        with pytest.raises(MalformedTransitionError) as exc:
            Automaton(2, 1, ((0,), ("x",)))
        assert (exc.value.row, exc.value.column) == (1, 0)

    def test_rows_are_normalized_to_tuples(self):
        aut = Automaton(2, 1, [[1], [0]])
        assert aut.delta == ((1,), (0,))


class TestMasks:
    def test_mask_round_trip(self):
        assert mask_from([0, 2, 5]) == 0b100101
        assert states_of(0b100101) == (0, 2, 5)
        assert states_of(0) == ()

    def test_full_mask(self, c3):
        assert c3.full_mask == 0b111


class TestApplication:
    def test_apply_reads_left_to_right(self, c3):
        # b sends 0 to 1, then a sends 1 to 2
        assert c3.apply(0, (1, 0)) == 2
        assert c3.apply(0, ()) == 0

    def test_state_map_of_empty_word_is_identity(self, c3):
        assert c3.state_map(()) == (0, 1, 2)

    def test_image_example(self, c3):
        assert c3.image(0b111, (1, 0, 0, 1)) == 0b010

    def test_preimage_example(self, c3):
        assert c3.preimage(0b010, (1,)) == 0b011

    def test_preimage_can_shrink_and_grow(self, c3):
        # nothing maps to 0 under b, while two states map to 1
        assert c3.preimage(0b001, (1,)) == 0
        assert c3.preimage(0b010, (1,)).bit_count() == 2

    @given(automata_with_words())
    def test_apply_composes(self, aw):
        aut, word = aw
        cut = len(word) // 2
        u, v = word[:cut], word[cut:]
        for q in range(aut.n):
            assert aut.apply(q, word) == aut.apply(aut.apply(q, u), v)

    @given(automata_with_words())
    def test_state_map_matches_apply(self, aw):
        aut, word = aw
        m = aut.state_map(word)
        assert m == tuple(aut.apply(q, word) for q in range(aut.n))

    @given(automata_with_words(), st.integers(0, 255))
    def test_image_never_grows(self, aw, raw_mask):
        aut, word = aw
        mask = raw_mask & aut.full_mask
        assert aut.image(mask, word).bit_count() <= mask.bit_count()

    @given(automata_with_words(), st.integers(0, 255), st.integers(0, 255))
    def test_image_preimage_adjunction(self, aw, raw_s, raw_t):
        aut, word = aw
        s = raw_s & aut.full_mask
        t = raw_t & aut.full_mask
        forward = aut.image(s, word) & ~t == 0
        backward = s & ~aut.preimage(t, word) == 0
        assert forward == backward


class TestSynchronization:
    def test_reset_word_detection(self, c3):
        assert c3.is_reset_word((1, 0, 0, 1))
        assert not c3.is_reset_word((0,))
        assert not c3.is_reset_word(())

    def test_single_state_resets_on_empty_word(self):
        aut = Automaton(1, 1, ((0,),))
        assert aut.is_reset_word(())
        assert aut.is_synchronizing()

    def test_swap_toy_is_not_synchronizing(self, swap_toy):
        assert not swap_toy.is_synchronizing()

    def test_classic_family_is_synchronizing(self, c3, c4, c5):
        for aut in (c3, c4, c5):
            assert aut.is_synchronizing()

    @given(automata_with_words(max_n=6, max_len=8))
    def test_reset_word_implies_synchronizing(self, aw):
        aut, word = aw
        if aut.is_reset_word(word):
            assert aut.is_synchronizing()

    @given(automata_with_words(max_n=5, max_len=7))
    def test_synchronizing_matches_exhaustive_pair_check(self, aw):
        # oracle: every pair must admit some merging word of length < n^2
        aut, _ = aw
        merged = all(self._pair_merges(aut, q, r)
                     for q in range(aut.n) for r in range(q + 1, aut.n))
        assert aut.is_synchronizing() == merged

    @staticmethod
    def _pair_merges(aut, q, r):
        seen = {(q, r)}
        frontier = [(q, r)]
        while frontier:
            nxt = []
            for a, b in frontier:
                if a == b:
                    return True
                for x in range(aut.k):
                    c, d = aut.delta[a][x], aut.delta[b][x]
                    key = (c, d) if c <= d else (d, c)
                    if key not in seen:
                        seen.add(key)
                        nxt.append(key)
            frontier = nxt
        return any(a == b for a, b in seen)
