from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fembed.combinatorics import (
    ApWitness,
    DensityReport,
    contains_k_ap,
    is_piecewise_syndetic,
    is_syndetic,
    is_thick,
    longest_ap,
    longest_run,
    max_gap,
    sliding_window_density,
    upper_banach_density,
)
from fembed.setrep import EVENS, NAT, FiniteSet, SampledPrefix, normalize, sample, up

from conftest import periodic_sets


class TestDensity:
    @pytest.mark.parametrize("s, value", [
        (EVENS, Fraction(1, 2)),
        (NAT, Fraction(1)),
        (FiniteSet((0, 3, 11, 32)), Fraction(0)),
        (up(3, {0, 1}), Fraction(2, 3)),
    ])
    def test_exact(self, s, value):
        r = upper_banach_density(s)
        assert r.value == value and r.method == "exact"

    def test_windowed_matches_exact(self):
        s = up(3, {0, 1})
        r = upper_banach_density(sample(s, 3000), 300)
        assert r.method == "windowed" and r.window == 300
        assert abs(r.value - Fraction(2, 3)) <= Fraction(1, 300)

    def test_report_bounds(self):
        with pytest.raises(ValueError):
            DensityReport(Fraction(3, 2), "exact")

    def test_sliding_window(self):
        assert sliding_window_density([0, 1, 2, 9], 10, 3) == 1
        assert sliding_window_density([0, 5], 4, 8) == Fraction(1, 8)
        with pytest.raises(ValueError):
            sliding_window_density([], 10, 0)

    @given(st.lists(st.integers(0, 80), unique=True), st.integers(1, 20))
    def test_sliding_window_brute(self, els, w):
        members = set(els)
        best = max(sum(x in members for x in range(s, s + w)) for s in range(0, 81 - w + 1))
        assert sliding_window_density(els, 81, w) == Fraction(best, w)

    @given(periodic_sets(), st.integers(1, 8), st.integers(1, 5))
    def test_windowed_monotone_in_horizon(self, s, m, extra):
        w = m * s.q
        h = s.p + 5 * w
        lo = upper_banach_density(sample(s, h), w).value
        hi = upper_banach_density(sample(s, h + extra * s.q), w).value
        assert lo <= hi

    @given(periodic_sets(max_p=0), st.integers(1, 6))
    def test_windowed_bounded_by_exact(self, s, m):
        # with no preperiod and a window that is a multiple of q
        w = m * s.q
        assert upper_banach_density(sample(s, 10 * w), w).value <= upper_banach_density(s).value


class TestThickSyndetic:
    def test_examples(self):
        assert is_thick(NAT).is_yes
        assert is_thick(EVENS).is_no
        assert is_thick(up(1, {0}, "11111")).is_yes
        assert is_syndetic(EVENS).is_yes and is_piecewise_syndetic(EVENS).is_yes
        fin = FiniteSet((0, 1, 2))
        assert is_syndetic(fin).is_no and is_piecewise_syndetic(fin).is_no
        v = is_syndetic(up(10, {0}))
        assert v.is_yes and v.witness == 10

    def test_sample_never_thick(self):
        v = is_thick(SampledPrefix(tuple(range(100)), 100), threshold=10)
        assert v.is_unknown and v.witness == (0, 100)
        assert is_syndetic(SampledPrefix((0, 4, 6), 10)).witness == 4
        assert is_piecewise_syndetic(SampledPrefix((0, 4, 6), 10)).is_unknown

    def test_runs_and_gaps(self):
        assert longest_run([0, 2, 3, 4, 8, 9]) == (2, 3)
        assert longest_run([]) == (0, 0)
        assert max_gap([1, 4, 5]) == 3
        assert max_gap([1]) is None

    @given(periodic_sets())
    def test_implication_chain(self, s):
        if is_thick(s).is_yes:
            assert is_syndetic(s).is_yes
        if is_syndetic(s).is_yes:
            assert is_piecewise_syndetic(s).is_yes
        if is_piecewise_syndetic(s).is_yes:
            assert upper_banach_density(s).value > 0

    @given(periodic_sets())
    def test_syndetic_witness_bounds_tail_gaps(self, s):
        v = is_syndetic(s)
        if v.is_yes:
            n = normalize(s)
            tail = [x for x in range(n.p, n.p + 4 * n.q) if x in n]
            assert max(b - a for a, b in zip(tail, tail[1:])) <= v.witness


class TestAp:
    def test_examples(self):
        v = contains_k_ap(EVENS, 5)
        assert v.is_yes and v.witness.start == 0 and v.witness.difference == 2
        assert contains_k_ap(FiniteSet((0, 1, 3)), 3, 4).is_no
        v = contains_k_ap(up(7, {3}, "11"), 100)
        assert v.is_yes and v.witness.difference == 7 and v.witness.length == 100

    def test_rejects_k0(self):
        with pytest.raises(ValueError):
            contains_k_ap(EVENS, 0)

    def test_sample_is_unknown_when_absent(self):
        assert contains_k_ap(SampledPrefix((0, 1, 3), 5), 3).is_unknown
        assert contains_k_ap(SampledPrefix((0, 1, 2), 5), 3).is_yes
        assert contains_k_ap(SampledPrefix((), 5), 1).is_unknown

    def test_longest(self):
        assert longest_ap(FiniteSet((0, 3, 11, 32)), 100) == ApWitness(0, 3, 2)
        assert longest_ap(EVENS, 10) == ApWitness(0, 2, 5)
        assert longest_ap(FiniteSet((50,)), 10) is None
        assert longest_ap(FiniteSet((1, 2, 3, 5, 7, 9, 11)), 20) == ApWitness(1, 2, 6)

    @settings(max_examples=150)
    @given(st.lists(st.integers(0, 40), min_size=1, max_size=12, unique=True))
    def test_longest_brute(self, els):
        members = set(els)
        best = 1
        for a in members:
            for d in range(1, 41):
                n = 1
                while a + n * d in members:
                    n += 1
                best = max(best, n)
        w = longest_ap(FiniteSet.of(els), 41)
        assert w.length == best
        assert all(t in members for t in w.terms())

    @given(periodic_sets(), st.integers(1, 8))
    def test_witness_terms_are_members(self, s, k):
        v = contains_k_ap(s, k, 200)
        if v.is_yes:
            assert v.witness.length == k
            assert all(t in s for t in v.witness.terms())

    @given(st.lists(st.integers(0, 30), max_size=8, unique=True), st.integers(1, 5))
    def test_finite_k_ap_is_exact(self, els, k):
        v = contains_k_ap(FiniteSet.of(els), k)
        longest = longest_ap(FiniteSet.of(els), 31)
        assert v.is_yes == (longest is not None and longest.length >= k)
