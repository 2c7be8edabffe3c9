"""Expansion steps, escape search, full synthesis and the length bounds."""

import pytest

from synckit.automaton import Automaton
from synckit.errors import (
    BudgetExhaustedError,
    InvalidSubsetError,
    NotOneClusterError,
    NotPrimeError,
    NotSynchronizingError,
)
from synckit.generators import cerny, random_one_cluster
from synckit.linalg import act, act_letter, balanced_vector, cycle_pairing
from synckit.structure import OneClusterCertificate, certificate
from synckit.synthesis import (
    FamilyItem,
    VectorFamily,
    escape_search,
    expand_singleton,
    expand_step,
    expand_subset,
    family_of,
    length_bound,
    synchronize_one_cluster_prime,
    worst_level_bound,
)


def shortest_escape_oracle(aut, family, cycle_mask, max_len):
    """Plain breadth-first enumeration: shortest prepended word giving any
    family vector a nonzero cycle pairing, with no span pruning at all.

    Deduplicates only exact duplicate vectors, which cannot change the
    minimum length.  Returns None if max_len is exhausted.
    """
    frontier = {item.vector for item in family.items}
    for length in range(max_len + 1):
        if any(cycle_pairing(cycle_mask, v) for v in frontier):
            return length
        frontier = {act_letter(aut, x, v)
                    for v in frontier for x in range(aut.k)}
    return None


class TestEscapeSearch:
    def test_immediate_escape_returns_empty_word(self, c3):
        cert = certificate(c3, 0)
        family = family_of(c3, 3, [((1,), 0b001)])
        res = escape_search(c3, family, cert.cycle_mask)
        assert res.word == () and res.index == 0

    def test_escape_on_rotation_family(self, c5):
        cert = certificate(c5, 0)
        family = family_of(c5, 5, (((), 1 << q) for q in cert.cycle))
        res = escape_search(c5, family, cert.cycle_mask)
        assert len(res.word) == 1
        assert res.budget == 1
        v = act(c5, res.word, family.items[res.index].vector)
        assert cycle_pairing(cert.cycle_mask, v) != 0

    def test_budget_reflects_family_span(self, c5):
        cert = certificate(c5, 0)
        family = family_of(c5, 5, (((), 1 << q) for q in cert.cycle))
        # five singleton vectors summing to zero span four dimensions
        res = escape_search(c5, family, cert.cycle_mask)
        assert res.budget == c5.n - 4

    def test_unsynchronizable_family_exhausts(self, swap_toy):
        cert = certificate(swap_toy, 0)
        family = family_of(swap_toy, 2, (((), 1 << q) for q in cert.cycle))
        with pytest.raises(BudgetExhaustedError):
            escape_search(swap_toy, family, cert.cycle_mask)

    def test_matches_plain_enumeration(self, c3, c5):
        instances = [c3, c5, cerny(7)]
        for seed in range(4):
            instances.append(random_one_cluster(7, 3, 2, seed=seed))
        for aut in instances:
            cert = certificate(aut, 0)
            prefix = (0,) * cert.level
            family = family_of(
                aut, cert.p, ((prefix, 1 << q) for q in cert.cycle))
            res = escape_search(aut, family, cert.cycle_mask)
            oracle = shortest_escape_oracle(
                aut, family, cert.cycle_mask, res.budget)
            assert len(res.word) == oracle


class TestExpandStep:
    def test_requires_zero_sum(self, c3):
        family = family_of(c3, 3, [((), 0b001)])
        assert not family.zero_sum
        with pytest.raises(InvalidSubsetError):
            expand_step(c3, family, 0b111)

    def test_positive_pairing_ties_break_to_least_index(self, c3):
        items = (
            FamilyItem((), 0b001, (-2, 1, 1)),
            FamilyItem((), 0b001, (1, -1, 0)),
            FamilyItem((), 0b001, (1, 0, -1)),
        )
        family = VectorFamily(items, True)
        res = expand_step(c3, family, 0b001)
        assert res.word == ()
        assert res.index == 1

    def test_picks_largest_gain(self, c3):
        items = (
            FamilyItem((), 0b001, (1, -1, 0)),
            FamilyItem((), 0b001, (2, 0, -2)),
            FamilyItem((), 0b001, (-3, 1, 2)),
        )
        family = VectorFamily(items, True)
        assert expand_step(c3, family, 0b001).index == 1


class TestSeedStep:
    def test_preimage_meets_cycle_twice(self, c5):
        cert = certificate(c5, 0)
        seed = expand_singleton(c5, cert)
        hit = cert.cycle_mask & c5.preimage(1 << seed.state, seed.word)
        assert hit.bit_count() >= 2
        assert len(seed.word) <= c5.n - cert.p + 1 + cert.level

    def test_deep_tail_budget(self, deep_tail):
        # letter 1 of the fixture is the identity, so swap in a letter
        # that merges 0 and 1 to make the instance synchronizing
        rows = tuple((deep_tail.delta[q][0], 0 if q < 2 else q)
                     for q in range(deep_tail.n))
        aut = Automaton(deep_tail.n, 2, rows)
        assert aut.is_synchronizing()
        cert = certificate(aut, 0)
        seed = expand_singleton(aut, cert)
        assert len(seed.word) <= aut.n - cert.p + 1 + cert.level
        assert seed.word[-cert.level:] == (0,) * cert.level
        hit = cert.cycle_mask & aut.preimage(1 << seed.state, seed.word)
        assert hit.bit_count() >= 2


class TestGrowStep:
    def test_rejects_subset_off_the_cycle(self, deep_tail):
        cert = certificate(deep_tail, 0)
        off = (1 << 0) | (1 << 5)  # state 5 is a tail state
        with pytest.raises(InvalidSubsetError):
            expand_subset(deep_tail, cert, off)

    def test_rejects_singleton_and_full_cycle(self, c5):
        cert = certificate(c5, 0)
        with pytest.raises(InvalidSubsetError):
            expand_subset(c5, cert, 0b00001)
        with pytest.raises(InvalidSubsetError):
            expand_subset(c5, cert, 0b11111)

    def test_strictly_grows_subset(self, c5):
        cert = certificate(c5, 0)
        subset = 0b00011
        grow = expand_subset(c5, cert, subset)
        wider = cert.cycle_mask & c5.preimage(subset, grow.word)
        assert wider.bit_count() > subset.bit_count()
        assert len(grow.word) <= c5.n + cert.level


class TestSynthesis:
    def test_classic_three_state_trace(self, c3):
        trace = synchronize_one_cluster_prime(c3, certificate(c3, 0))
        assert trace.reset_word == (1, 0, 0, 1)
        assert trace.bound == 4
        assert [s.phase for s in trace.steps] == ["seed", "grow"]
        assert c3.is_reset_word(trace.reset_word)

    def test_classic_five_state_meets_bound_exactly(self, c5):
        trace = synchronize_one_cluster_prime(c5, certificate(c5, 0))
        assert len(trace.reset_word) == 16 == trace.bound == (c5.n - 1) ** 2
        assert c5.is_reset_word(trace.reset_word)

    def test_single_state_trivial(self):
        aut = Automaton(1, 1, ((0,),))
        cert = certificate(aut, 0)
        trace = synchronize_one_cluster_prime(aut, cert)
        assert trace.reset_word == () and trace.bound == 0 and trace.steps == ()

    def test_step_accounting(self):
        aut = random_one_cluster(9, 5, 2, seed=11)
        cert = certificate(aut, 0)
        trace = synchronize_one_cluster_prime(aut, cert)
        n, p, level = aut.n, cert.p, cert.level
        assert trace.steps[0].phase == "seed"
        assert trace.steps[0].depth_budget == n - p + 1 + level
        grow_steps = trace.steps[1:]
        assert len(grow_steps) <= p - 2
        for step in trace.steps:
            assert len(step.word) <= step.depth_budget
            assert step.search_depth_used <= step.search_budget
            assert step.subset_after.bit_count() > step.subset_before.bit_count()
            if step.phase == "grow":
                assert step.depth_budget == n + level
        assert len(trace.reset_word) <= trace.bound <= (n - 1) ** 2

    def test_rejects_composite_cycle(self, c4):
        cert = certificate(c4, 0)
        with pytest.raises(NotPrimeError):
            synchronize_one_cluster_prime(c4, cert)

    def test_rejects_fixed_point_cycle(self):
        # constant-ish letter: single cycle of length 1, level 2
        aut = Automaton(3, 2, ((0, 1), (0, 2), (1, 0)))
        cert = certificate(aut, 0)
        assert cert.p == 1
        with pytest.raises(NotPrimeError):
            synchronize_one_cluster_prime(aut, cert)

    def test_rejects_unsynchronizable(self, swap_toy):
        cert = certificate(swap_toy, 0)
        with pytest.raises(NotSynchronizingError):
            synchronize_one_cluster_prime(swap_toy, cert)

    def test_rejects_stale_certificate(self, c3, c5):
        stale = certificate(c5, 0)
        with pytest.raises(NotOneClusterError):
            synchronize_one_cluster_prime(c3, stale)

    def test_rejects_certificate_for_wrong_cycle(self, c3):
        real = certificate(c3, 0)
        forged = OneClusterCertificate(
            letter=0, cycle=(0, 1), level=real.level, p=2,
            p_is_prime=True, tail_depth=real.tail_depth)
        with pytest.raises(NotOneClusterError):
            synchronize_one_cluster_prime(c3, forged)

    def test_rejects_non_one_cluster_letter(self, c3):
        real = certificate(c3, 0)
        forged = OneClusterCertificate(
            letter=1, cycle=real.cycle, level=real.level, p=3,
            p_is_prime=True, tail_depth=real.tail_depth)
        with pytest.raises(NotOneClusterError):
            synchronize_one_cluster_prime(c3, forged)


class TestLengthBound:
    @pytest.mark.parametrize("n,p,level,value", [
        (3, 3, 0, 4),
        (5, 5, 0, 16),
        (15, 5, 3, 71),
        (2, 2, 0, 1),
    ])
    def test_frozen_values(self, n, p, level, value):
        assert length_bound(n, p, level) == value

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            length_bound(5, 0, 0)
        with pytest.raises(ValueError):
            length_bound(5, 7, 0)
        with pytest.raises(ValueError):
            length_bound(5, 3, -1)
        with pytest.raises(ValueError):
            length_bound(5, 3, 3)

    def test_worst_level_is_the_max_over_levels(self):
        for n in range(2, 30):
            for p in range(1, n + 1):
                worst = max(length_bound(n, p, lv) for lv in range(n - p + 1))
                assert worst == worst_level_bound(p, n)
                assert worst == length_bound(n, p, n - p)

    def test_worst_level_bound_frozen(self):
        assert worst_level_bound(9, 10) == 81
        assert worst_level_bound(10, 10) == 81
        assert worst_level_bound(1, 2) == 1
        assert worst_level_bound(1, 1) == 0

    def test_worst_level_bound_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            worst_level_bound(0, 5)
        with pytest.raises(ValueError):
            worst_level_bound(6, 5)
