import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fembed.fe import (
    fe_decide,
    fe_equiv,
    fe_finite_into,
    fe_oracle_bruteforce,
    mutually_strongly_unembeddable,
    strongly_non_fe,
)
from fembed.setrep import (
    EMPTY,
    EVENS,
    NAT,
    ODDS,
    FiniteSet,
    SampledPrefix,
    intersect,
    is_subset,
    translate,
    union,
    up,
)

from conftest import periodic_sets


def embeds_exactly(a, b, k):
    return is_subset(translate(a, k), b)


class TestExamples:
    def test_evens_into_odds(self):
        v = fe_decide(EVENS, ODDS)
        assert v.is_yes and v.witness == 1

    def test_equivalence_witnesses(self):
        v = fe_equiv(EVENS, ODDS)
        assert v.is_yes and v.witness == (1, 1)

    def test_nat_into_evens(self):
        v = fe_decide(NAT, EVENS)
        assert v.is_no and v.witness == FiniteSet((0, 1))

    def test_sparse_head_and_evens_tail(self):
        a = union(FiniteSet((1,)), intersect(EVENS, up(1, {0}, "0" * 10)))
        v = fe_decide(a, EVENS)
        assert v.is_no and v.witness == FiniteSet((1, 10))

    def test_empty_is_minimum(self):
        for b in (EMPTY, EVENS, FiniteSet((4,))):
            v = fe_decide(EMPTY, b)
            assert v.is_yes and v.witness == 0

    def test_nonempty_into_empty(self):
        v = fe_decide(FiniteSet((3,)), EMPTY)
        assert v.is_no and v.witness == FiniteSet((3,))

    def test_singletons_equivalent(self):
        assert fe_equiv(FiniteSet((7,)), FiniteSet((2,))).is_no  # 7 + k = 2 is impossible
        assert fe_decide(FiniteSet((2,)), FiniteSet((7,))).witness == 5
        assert fe_decide(FiniteSet((7,)), NAT).witness == 0

    def test_infinite_into_finite(self):
        v = fe_decide(EVENS, FiniteSet((0, 2, 4, 6)))
        assert v.is_no

    def test_periodic_reflexive_with_preperiod(self):
        s = up(3, {1}, "1")
        v = fe_decide(s, s)
        assert v.is_yes and v.witness == 0

    def test_least_translate_exceeds_period(self):
        a = up(1, {0})
        b = up(1, {0}, "0" * 5)
        v = fe_decide(a, b)
        assert v.is_yes and v.witness == 5

    def test_finite_into(self):
        assert fe_finite_into(FiniteSet((0, 2, 4)), ODDS).witness == 1
        assert fe_finite_into([0, 1], EVENS).witness == FiniteSet((0, 1))


class TestSampled:
    def test_yes_is_never_definite_for_sampled_a(self):
        v = fe_decide(SampledPrefix((0, 2, 4), 6), EVENS)
        assert v.is_unknown and v.witness == 0

    def test_prefix_failure_is_definite(self):
        v = fe_decide(SampledPrefix((0, 1), 5), EVENS)
        assert v.is_no and v.witness == FiniteSet((0, 1))

    def test_sampled_target_unknown(self):
        v = fe_decide(FiniteSet((0, 100)), SampledPrefix((0, 3), 10))
        assert v.is_unknown

    def test_sampled_target_tail_gap(self):
        b = SampledPrefix((0, 3, 11), 20, tail_gap=12)
        v = fe_decide(FiniteSet((0, 1)), b)
        assert v.is_no and v.witness == FiniteSet((0, 1))
        assert fe_decide(FiniteSet((0, 8)), b).witness == 3

    def test_incomplete_target_never_no(self):
        b = SampledPrefix((0, 3), 10, complete=False, tail_gap=50)
        assert fe_decide(FiniteSet((0, 1)), b).is_unknown


class TestStrong:
    def test_evens_odds(self):
        v = strongly_non_fe(EVENS, ODDS)
        assert v.is_no and v.witness == FiniteSet((0, 2))
        assert mutually_strongly_unembeddable(EVENS, ODDS).witness == 2

    def test_common_difference_of_evens(self):
        v = mutually_strongly_unembeddable(EVENS, EVENS)
        assert v.is_no and v.witness == 2

    def test_disjoint_differences(self):
        a, b = FiniteSet((0, 3, 11, 32)), FiniteSet((1, 6, 19, 53))
        assert strongly_non_fe(a, b).is_yes
        assert strongly_non_fe(b, a).is_yes
        assert mutually_strongly_unembeddable(a, b).is_yes

    def test_one_direction_is_not_symmetric(self):
        # only rightward translates count
        a, b = FiniteSet((1, 2)), FiniteSet((0, 1))
        assert strongly_non_fe(a, b).is_yes
        v = strongly_non_fe(b, a)
        assert v.is_no and v.witness == FiniteSet((0, 1))
        assert mutually_strongly_unembeddable(a, b).is_no

    def test_samples(self):
        a = SampledPrefix((0, 3, 11), 20)
        assert strongly_non_fe(a, SampledPrefix((1, 6, 19), 30)).is_unknown
        v = strongly_non_fe(SampledPrefix((0, 3), 20), SampledPrefix((1, 4), 30))
        assert v.is_no and v.witness == FiniteSet((0, 3))

    @given(periodic_sets(max_p=5, max_q=6), periodic_sets(max_p=5, max_q=6))
    def test_mutual_is_symmetric(self, a, b):
        assert mutually_strongly_unembeddable(a, b).outcome == \
            mutually_strongly_unembeddable(b, a).outcome

    @given(periodic_sets(max_p=5, max_q=6), periodic_sets(max_p=5, max_q=6))
    def test_mutual_is_both_directions(self, a, b):
        both = strongly_non_fe(a, b).is_yes and strongly_non_fe(b, a).is_yes
        assert mutually_strongly_unembeddable(a, b).is_yes == both

    @settings(max_examples=200)
    @given(st.lists(st.integers(0, 30), max_size=6, unique=True),
           st.lists(st.integers(0, 30), max_size=6, unique=True))
    def test_matches_two_element_subsets(self, xs, ys):
        a, b = FiniteSet.of(xs), FiniteSet.of(ys)
        brute = not any(
            fe_decide(FiniteSet((u, v)), b).is_yes for u in xs for v in xs if u < v
        )
        assert strongly_non_fe(a, b).is_yes == brute

    @settings(max_examples=100)
    @given(periodic_sets(max_p=4, max_q=4), periodic_sets(max_p=4, max_q=4))
    def test_periodic_against_pairs(self, a, b):
        bound = 3 * (a.p + a.q + b.p + b.q)
        xs = [x for x in range(bound) if x in a]
        brute = not any(
            fe_decide(FiniteSet((u, v)), b).is_yes for u in xs for v in xs if u < v
        )
        assert strongly_non_fe(a, b).is_yes == brute


small = periodic_sets(max_p=5, max_q=6)


class TestPreorder:
    @given(periodic_sets())
    def test_reflexive(self, s):
        v = fe_decide(s, s)
        assert v.is_yes and v.witness == 0

    @settings(max_examples=200)
    @given(small, small, small)
    def test_transitive(self, a, b, c):
        ab, bc = fe_decide(a, b), fe_decide(b, c)
        assume(ab.is_yes and bc.is_yes)
        assert fe_decide(a, c).is_yes

    @given(periodic_sets(), st.integers(0, 20))
    def test_embeds_in_translate(self, s, k):
        v = fe_decide(s, translate(s, k))
        assert v.is_yes and v.witness <= k

    def test_translate_can_be_strictly_larger(self):
        a = FiniteSet((1,))
        assert fe_decide(translate(a, 1), a).is_no
        b = union(FiniteSet((0, 1)), intersect(EVENS, up(1, {0}, "0000")))
        assert fe_decide(translate(b, 1), b).is_no

    @given(periodic_sets(max_p=0), st.integers(0, 20))
    def test_periodic_translate_equivalent(self, s, k):
        # a multiple of the period moves a purely periodic set into itself
        assume(s.pattern)
        assert fe_equiv(s, translate(s, k * s.q)).is_yes

    @given(small, small, st.frozensets(st.integers(0, 40), max_size=5))
    def test_monotone_in_target(self, a, b, extra):
        bigger = union(b, FiniteSet.of(extra))
        if fe_decide(a, b).is_yes:
            assert fe_decide(a, bigger).is_yes

    @given(small, small)
    def test_subset_embeds(self, a, b):
        assert fe_decide(intersect(a, b), a).is_yes


class TestCertificates:
    @settings(max_examples=300)
    @given(periodic_sets(), periodic_sets())
    def test_witnesses_check(self, a, b):
        v = fe_decide(a, b)
        assert v.definite
        if v.is_yes:
            assert embeds_exactly(a, b, v.witness)
            # least: no smaller translate works
            assert all(not embeds_exactly(a, b, k) for k in range(v.witness))
        else:
            cert = v.witness
            assert is_subset(cert, a)
            assert fe_finite_into(cert, b).is_no
            bound = b.p + b.q + max(cert.elements) + 1
            assert all(not embeds_exactly(cert, b, k) for k in range(bound))


class TestOracle:
    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            fe_oracle_bruteforce(EVENS, ODDS, 0, 5)

    def test_examples(self):
        assert fe_oracle_bruteforce(NAT, EVENS, 50, 50).witness == FiniteSet((0, 1))
        v = fe_oracle_bruteforce(EVENS, ODDS, 50, 50)
        assert v.is_unknown and v.witness == 1
        v = fe_oracle_bruteforce(FiniteSet((0, 4)), ODDS, 10, 10)
        assert v.is_yes and v.witness == 1

    def test_not_exhaustive(self):
        v = fe_oracle_bruteforce(FiniteSet((0, 1)), FiniteSet((50, 51)), 5, 10)
        assert v.is_unknown

    @settings(max_examples=200)
    @given(periodic_sets(max_p=6, max_q=8), periodic_sets(max_p=6, max_q=8))
    def test_agrees_with_decision(self, a, b):
        w = a.p + 4 * math.lcm(a.q, b.q)
        kmax = b.p + 4 * b.q
        d = fe_decide(a, b)
        o = fe_oracle_bruteforce(a, b, max(w, 1), max(kmax, 1))
        if d.is_yes:
            assert not o.is_no
        elif d.witness.elements and max(d.witness.elements) <= w:
            assert o.is_no
