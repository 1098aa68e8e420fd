"""Combinatorial largeness predicates that are inherited upward along <=fe.

Thickness, syndeticity, piecewise syndeticity, upper Banach density and
arithmetic progressions.  Exact on finite and ultimately periodic sets;
on samples the answers are windowed lower bounds or Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from fembed.setrep import (
    FiniteSet,
    GroundSet,
    SampledPrefix,
    UltimatelyPeriodic,
    iter_elements,
    normalize,
)
from fembed.verdict import TriVerdict


@dataclass(frozen=True)
class DensityReport:
    value: Fraction
    method: str  # "exact" or "windowed"
    window: int | None = None

    def __post_init__(self):
        if not 0 <= self.value <= 1:
            raise ValueError("density must lie in [0, 1]")


@dataclass(frozen=True)
class ApWitness:
    start: int
    difference: int
    length: int

    def terms(self) -> list[int]:
        return [self.start + i * self.difference for i in range(self.length)]


def _indicator(elements, horizon: int) -> np.ndarray:
    bits = np.zeros(horizon, dtype=np.int64)
    idx = np.asarray(elements, dtype=np.int64)
    bits[idx[idx < horizon]] = 1
    return bits


def sliding_window_density(elements, horizon: int, window: int) -> Fraction:
    """Max over intervals [s, s + window) inside [0, horizon) of count / window.

    Elements at or above ``horizon`` are ignored.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    bits = _indicator(list(elements), horizon)
    if horizon <= window:
        return Fraction(int(bits.sum()), window)
    csum = np.concatenate(([0], np.cumsum(bits)))
    best = int((csum[window:] - csum[:-window]).max())
    return Fraction(best, window)


def upper_banach_density(s: GroundSet, window: int = 1000) -> DensityReport:
    """Exact |pattern|/q for periodic sets, 0 for finite ones, windowed on samples."""
    s = normalize(s)
    if isinstance(s, FiniteSet):
        return DensityReport(Fraction(0), "exact")
    if isinstance(s, UltimatelyPeriodic):
        return DensityReport(Fraction(len(s.pattern), s.q), "exact")
    return DensityReport(sliding_window_density(s.elements, s.horizon, window), "windowed", window)


def longest_run(elements) -> tuple[int, int]:
    """(start, length) of the longest block of consecutive integers."""
    best = (0, 0)
    run_start, prev, length = None, None, 0
    for x in elements:
        if prev is not None and x == prev + 1:
            length += 1
        else:
            run_start, length = x, 1
        if length > best[1]:
            best = (run_start, length)
        prev = x
    return best


def max_gap(elements) -> int | None:
    """Largest difference between consecutive elements (None with fewer than two)."""
    els = list(elements)
    if len(els) < 2:
        return None
    return max(b - a for a, b in zip(els, els[1:]))


def is_thick(s: GroundSet, threshold: int = 1) -> TriVerdict:
    """Contains arbitrarily long intervals.  Never Yes for a sample."""
    s = normalize(s)
    if isinstance(s, FiniteSet):
        return TriVerdict.no(longest_run(s.elements), "finite sets are not thick")
    if isinstance(s, UltimatelyPeriodic):
        if len(s.pattern) == s.q:
            return TriVerdict.yes(s.p, f"every x >= {s.p} is a member")
        return TriVerdict.no(s.q, "the periodic tail has gaps")
    run = longest_run(s.elements)
    if run[1] >= threshold:
        return TriVerdict.unknown(f"run of length {run[1]} >= {threshold} found below {s.horizon}", run)
    return TriVerdict.unknown(f"longest run below {s.horizon} has length {run[1]}", run)


def is_syndetic(s: GroundSet) -> TriVerdict:
    """Gaps between consecutive elements are bounded."""
    s = normalize(s)
    if isinstance(s, FiniteSet):
        return TriVerdict.no(reason="finite sets are not syndetic")
    if isinstance(s, UltimatelyPeriodic):
        return TriVerdict.yes(_tail_gap_bound(s), "periodic tail is nonempty")
    return TriVerdict.unknown(f"max gap below {s.horizon} is {max_gap(s.elements)}", max_gap(s.elements))


def is_piecewise_syndetic(s: GroundSet) -> TriVerdict:
    # for periodic sets PS collapses to syndetic; on samples the two stay distinct
    s = normalize(s)
    if isinstance(s, FiniteSet):
        return TriVerdict.no(reason="finite sets are not piecewise syndetic")
    if isinstance(s, UltimatelyPeriodic):
        return TriVerdict.yes(_tail_gap_bound(s), "syndetic, hence piecewise syndetic")
    return TriVerdict.unknown(f"max gap below {s.horizon} is {max_gap(s.elements)}", max_gap(s.elements))


def _tail_gap_bound(s: UltimatelyPeriodic) -> int:
    res = sorted(s.pattern)
    return max(((b - a) for a, b in zip(res, res[1:] + [res[0] + s.q])), default=s.q)


def _longest_ap_in_bits(bits: np.ndarray) -> ApWitness | None:
    n = len(bits)
    if not bits.any():
        return None
    first = int(np.flatnonzero(bits)[0])
    best = ApWitness(first, 1, 1)
    for d in range(1, n):
        if (n - 1) // d + 1 <= best.length:
            break
        run = bits[:d].copy()
        blocks = [run]
        for lo in range(d, n, d):
            chunk = bits[lo: lo + d]
            run = chunk * (run[: len(chunk)] + 1)
            blocks.append(run)
        runs = np.concatenate(blocks)
        best_len = int(runs.max())
        if best_len > best.length:
            best_end = int(np.flatnonzero(runs == best_len)[0])
            best = ApWitness(best_end - (best_len - 1) * d, d, best_len)
    return best


def longest_ap(s: GroundSet, horizon: int) -> ApWitness | None:
    """Longest AP with every term below ``horizon`` (and below a sample's horizon).

    Ties go to the smaller difference, then the earlier end.  ``None`` for a
    set with no member in range.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    s = normalize(s)
    if isinstance(s, SampledPrefix):
        horizon = min(horizon, s.horizon)
        els = [x for x in s.elements if x < horizon]
    else:
        els = list(iter_elements(s, horizon))
    return _longest_ap_in_bits(_indicator(els, horizon))


def _exhaustive_k_ap(els: list[int], k: int) -> ApWitness | None:
    members = set(els)
    for i, a in enumerate(els):
        for b in els[i + 1:]:
            d = b - a
            if all(a + j * d in members for j in range(2, k)):
                return ApWitness(a, d, k)
    return None


def contains_k_ap(s: GroundSet, k: int, horizon: int = 1000) -> TriVerdict:
    """Whether s contains a k-term AP (difference >= 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    s = normalize(s)
    if isinstance(s, UltimatelyPeriodic):
        start = s.p + min((r - s.p) % s.q for r in s.pattern)
        return TriVerdict.yes(ApWitness(start, s.q, k), "periodic tail")
    els = list(s.elements)
    if isinstance(s, SampledPrefix):
        els = [x for x in els if x < min(horizon, s.horizon)]
    if k == 1:
        w = ApWitness(els[0], 1, 1) if els else None
    else:
        w = _exhaustive_k_ap(els, k)
    if w is not None:
        return TriVerdict.yes(w)
    if isinstance(s, FiniteSet):
        return TriVerdict.no(reason=f"no {k}-term AP among the {len(els)} elements")
    return TriVerdict.unknown(f"no {k}-term AP below {min(horizon, s.horizon)}")
