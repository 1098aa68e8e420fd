"""Subsets of N in three representations, plus their closed algebra.

``FiniteSet`` and ``UltimatelyPeriodic`` answer every membership query
definitely.  ``SampledPrefix`` knows its members only below a horizon and is
the carrier for infinite sets that have no periodic description.

All values are immutable; every operation returns a new value.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from fembed.verdict import TriVerdict


class HorizonError(ValueError):
    """A query needed membership information beyond a known horizon."""


@dataclass(frozen=True)
class FiniteSet:
    elements: tuple[int, ...] = ()

    def __post_init__(self):
        els = tuple(int(x) for x in self.elements)
        object.__setattr__(self, "elements", els)
        if els and els[0] < 0:
            raise ValueError("elements must be natural numbers")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError("elements must be strictly increasing")

    @classmethod
    def of(cls, items: Iterable[int]) -> FiniteSet:
        return cls(tuple(sorted(set(items))))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        i = bisect.bisect_left(self.elements, x)
        return i < len(self.elements) and self.elements[i] == x

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class UltimatelyPeriodic:
    """x is a member iff ``preperiod[x] == 1`` (x < p) or ``x % period in pattern`` (x >= p).

    Instances may be built in any form; :func:`normalize` produces the
    canonical one (minimal period, then minimal preperiod).
    """

    preperiod: tuple[int, ...] = ()
    period: int = 1
    pattern: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        bits = tuple(int(b) for b in self.preperiod)
        object.__setattr__(self, "preperiod", bits)
        object.__setattr__(self, "pattern", frozenset(int(r) for r in self.pattern))
        if any(b not in (0, 1) for b in bits):
            raise ValueError("preperiod bits must be 0 or 1")
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if any(r < 0 or r >= self.period for r in self.pattern):
            raise ValueError(f"pattern residues must lie in [0, {self.period})")

    @property
    def p(self) -> int:
        return len(self.preperiod)

    @property
    def q(self) -> int:
        return self.period

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x < len(self.preperiod):
            return self.preperiod[x] == 1
        return x % self.period in self.pattern

    def __str__(self) -> str:
        bits = "".join(map(str, self.preperiod))
        return f"up({bits};{self.period};{','.join(map(str, sorted(self.pattern)))})"


@dataclass(frozen=True)
class SampledPrefix:
    """A set known exactly below ``horizon`` and unknown at or above it.

    ``complete=False`` marks an under-approximation: listed elements are
    genuine members but absence below the horizon proves nothing.

    ``tail_gap`` is a structural guarantee about the unknown part: whenever
    x < y are members and y >= horizon, then ``y - x > tail_gap``.  It lets
    embedding searches of small-diameter sets terminate definitively.
    """

    elements: tuple[int, ...]
    horizon: int
    complete: bool = True
    tail_gap: int = 0

    def __post_init__(self):
        els = tuple(int(x) for x in self.elements)
        object.__setattr__(self, "elements", els)
        if self.horizon < 0 or self.tail_gap < 0:
            raise ValueError("horizon and tail_gap must be natural numbers")
        if els and (els[0] < 0 or els[-1] >= self.horizon):
            raise ValueError("sampled elements must lie in [0, horizon)")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError("elements must be strictly increasing")

    def __str__(self) -> str:
        shown = ",".join(map(str, self.elements[:12]))
        if len(self.elements) > 12:
            shown += ",..."
        return "{" + shown + "}" + f"<{self.horizon}"


GroundSet = Union[FiniteSet, UltimatelyPeriodic, SampledPrefix]

EMPTY = FiniteSet(())
NAT = UltimatelyPeriodic((), 1, frozenset({0}))
EVENS = UltimatelyPeriodic((), 2, frozenset({0}))
ODDS = UltimatelyPeriodic((), 2, frozenset({1}))


def up(period: int, pattern: Iterable[int], bits: str | Iterable[int] = "") -> GroundSet:
    """Canonical ultimately periodic set from a period, residues and preperiod bits."""
    if isinstance(bits, str):
        bits = [int(c) for c in bits]
    return normalize(UltimatelyPeriodic(tuple(bits), period, frozenset(pattern)))


def is_exact(s: GroundSet) -> bool:
    return not isinstance(s, SampledPrefix)


def is_finite(s: GroundSet) -> bool | None:
    if isinstance(s, FiniteSet):
        return True
    if isinstance(s, UltimatelyPeriodic):
        return isinstance(normalize(s), FiniteSet)
    return None


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def normalize(s: GroundSet) -> GroundSet:
    """Canonical form: minimal period by divisor scan, then greedy preperiod shrink."""
    if not isinstance(s, UltimatelyPeriodic):
        return s
    q, pattern = s.period, s.pattern
    for d in _divisors(q):
        if all((r in pattern) == ((r % d) in pattern) for r in range(q)):
            q, pattern = d, frozenset(r for r in pattern if r < d)
            break
    bits = list(s.preperiod)
    if not pattern:
        return FiniteSet(tuple(i for i, b in enumerate(bits) if b))
    while bits and bits[-1] == (1 if (len(bits) - 1) % q in pattern else 0):
        bits.pop()
    return UltimatelyPeriodic(tuple(bits), q, pattern)


def contains(s: GroundSet, x: int) -> bool | None:
    """Membership as ``True``/``False``, or ``None`` when it is not determined."""
    if x < 0:
        return False
    if isinstance(s, SampledPrefix):
        if x >= s.horizon:
            return None
        i = bisect.bisect_left(s.elements, x)
        found = i < len(s.elements) and s.elements[i] == x
        if found or s.complete:
            return found
        return None
    return x in s


def member(s: GroundSet, x: int) -> TriVerdict:
    value = contains(s, x)
    if value is None:
        return TriVerdict.unknown(f"{x} is beyond the known region of the sample")
    return TriVerdict.of_bool(value, witness=x)


def effective_horizon(s: GroundSet) -> float:
    return s.horizon if isinstance(s, SampledPrefix) else math.inf


def _periodic_view(s: GroundSet) -> UltimatelyPeriodic:
    if isinstance(s, FiniteSet):
        top = s.elements[-1] + 1 if s.elements else 0
        return UltimatelyPeriodic(tuple(1 if x in s else 0 for x in range(top)), 1, frozenset())
    assert isinstance(s, UltimatelyPeriodic)
    return s


def _combine_exact(a: GroundSet, b: GroundSet, op) -> GroundSet:
    ua, ub = _periodic_view(a), _periodic_view(b)
    pre = max(ua.p, ub.p)
    period = math.lcm(ua.q, ub.q)
    bits = tuple(1 if op(x in ua, x in ub) else 0 for x in range(pre))
    pattern = set()
    for r in range(period):
        x = pre + (r - pre) % period
        if op(x in ua, x in ub):
            pattern.add(r)
    return normalize(UltimatelyPeriodic(bits, period, frozenset(pattern)))


def _listed(s: GroundSet, bound: int) -> list[int]:
    """Known members below ``bound`` (bound must not exceed the horizon)."""
    if isinstance(s, SampledPrefix):
        return list(s.elements[: bisect.bisect_left(s.elements, bound)])
    return list(iter_elements(s, bound))


def _combine_sampled(a: GroundSet, b: GroundSet, op) -> SampledPrefix:
    horizon = int(min(effective_horizon(a), effective_horizon(b)))
    candidates = sorted(set(_listed(a, horizon)) | set(_listed(b, horizon)))
    keep = []
    for x in candidates:
        va, vb = contains(a, x), contains(b, x)
        if op(bool(va), bool(vb)):
            keep.append(x)
    complete = all(getattr(s, "complete", True) for s in (a, b))
    return SampledPrefix(tuple(keep), horizon, complete)


def intersect(a: GroundSet, b: GroundSet) -> GroundSet:
    if is_exact(a) and is_exact(b):
        if isinstance(a, FiniteSet) or isinstance(b, FiniteSet):
            small, other = (a, b) if isinstance(a, FiniteSet) else (b, a)
            return FiniteSet(tuple(x for x in small if x in other))
        return _combine_exact(a, b, lambda x, y: x and y)
    return _combine_sampled(a, b, lambda x, y: x and y)


def union(a: GroundSet, b: GroundSet) -> GroundSet:
    if is_exact(a) and is_exact(b):
        if isinstance(a, FiniteSet) and isinstance(b, FiniteSet):
            return FiniteSet.of(a.elements + b.elements)
        return _combine_exact(a, b, lambda x, y: x or y)
    return _combine_sampled(a, b, lambda x, y: x or y)


def translate(s: GroundSet, k: int) -> GroundSet:
    """The rightward translate ``s + k``."""
    if k < 0:
        raise ValueError("translate offsets must be >= 0")
    if k == 0:
        return s
    if isinstance(s, FiniteSet):
        return FiniteSet(tuple(x + k for x in s.elements))
    if isinstance(s, UltimatelyPeriodic):
        pattern = frozenset((r + k) % s.q for r in s.pattern)
        return normalize(UltimatelyPeriodic((0,) * k + s.preperiod, s.q, pattern))
    return SampledPrefix(tuple(x + k for x in s.elements), s.horizon + k, s.complete, s.tail_gap)


def shift_down_intersect(s: GroundSet, shifts: FiniteSet | Iterable[int]) -> GroundSet:
    """``{x : x + t in s for every t in shifts}``, the intersection of the sets s - t."""
    g = shifts.elements if isinstance(shifts, FiniteSet) else tuple(sorted(set(shifts)))
    if not g:
        raise ValueError("shift set G must be nonempty")
    top = g[-1]
    if isinstance(s, FiniteSet):
        return FiniteSet(tuple(x for x in range(max(0, (s.elements or (0,))[-1] - top + 1))
                               if all(x + t in s for t in g)))
    if isinstance(s, UltimatelyPeriodic):
        bits = tuple(1 if all(x + t in s for t in g) else 0 for x in range(s.p))
        pattern = frozenset(
            r for r in range(s.q)
            if all(s.p + (r - s.p) % s.q + t in s for t in g)
        )
        return normalize(UltimatelyPeriodic(bits, s.q, pattern))
    horizon = max(s.horizon - top, 0)
    known = set(s.elements)
    keep = tuple(
        e - g[0] for e in s.elements
        if e - g[0] < horizon and all(e - g[0] + t in known for t in g)
    )
    return SampledPrefix(keep, horizon, s.complete, s.tail_gap)


def difference_set(s: GroundSet, horizon: int | None = None) -> GroundSet:
    """Positive differences ``{y - x : x < y both in s}``.

    Exact for finite and ultimately periodic input.  For a sample only the
    differences realised by listed pairs are reported, as an incomplete
    prefix; ``horizon`` caps the differences considered.
    """
    if isinstance(s, FiniteSet):
        els = s.elements
        return FiniteSet.of(y - x for i, x in enumerate(els) for y in els[i + 1:])
    if isinstance(s, UltimatelyPeriodic):
        # a pair (a, a + d) can always be slid down so that a < p + q
        low = [a for a in range(s.p + s.q) if a in s]

        def realised(d: int) -> bool:
            return any(a + d in s for a in low)

        pre = max(s.p, 1)
        bits = tuple(1 if d > 0 and realised(d) else 0 for d in range(pre))
        pattern = frozenset(r for r in range(s.q) if realised(pre + (r - pre) % s.q))
        return normalize(UltimatelyPeriodic(bits, s.q, pattern))
    cap = s.horizon if horizon is None else min(horizon, s.horizon)
    els = s.elements
    diffs = {y - x for i, x in enumerate(els) for y in els[i + 1:] if y - x < cap}
    return SampledPrefix(tuple(sorted(diffs)), cap, complete=False)


def iter_elements(s: GroundSet, bound: int | None = None) -> Iterator[int]:
    """Members in increasing order, below ``bound`` when given."""
    if isinstance(s, SampledPrefix):
        if bound is not None and bound > s.horizon:
            raise HorizonError(f"bound {bound} exceeds sample horizon {s.horizon}")
        for x in s.elements:
            if bound is not None and x >= bound:
                return
            yield x
        return
    if isinstance(s, FiniteSet):
        for x in s.elements:
            if bound is not None and x >= bound:
                return
            yield x
        return
    x = 0
    while bound is None or x < bound:
        if x in s:
            yield x
        x += 1


def elements_below(s: GroundSet, bound: int) -> FiniteSet:
    return FiniteSet(tuple(iter_elements(s, bound)))


def min_element(s: GroundSet) -> int | None:
    """Least member, ``None`` for the empty set.

    Raises :class:`HorizonError` when a sample shows no member and cannot
    rule members out.
    """
    if isinstance(s, SampledPrefix):
        if s.elements:
            return s.elements[0]
        raise HorizonError(f"no member below horizon {s.horizon}; minimum undetermined")
    if isinstance(s, FiniteSet):
        return s.elements[0] if s.elements else None
    return next_element(s, -1)


def next_element(s: GroundSet, after: int) -> int | None:
    """Least member strictly greater than ``after``; ``None`` if there is none."""
    if isinstance(s, FiniteSet):
        i = bisect.bisect_right(s.elements, after)
        return s.elements[i] if i < len(s.elements) else None
    if isinstance(s, UltimatelyPeriodic):
        x = after + 1
        while x < s.p:
            if s.preperiod[x]:
                return x
            x += 1
        if not s.pattern:
            return None
        x = max(x, s.p)
        base = x - x % s.q
        best = None
        for r in s.pattern:
            cand = base + r
            if cand < x:
                cand += s.q
            if best is None or cand < best:
                best = cand
        return best
    i = bisect.bisect_right(s.elements, after)
    if i < len(s.elements):
        if s.complete:
            return s.elements[i]
        # listed elements are genuine, but an unlisted smaller one may exist
        raise HorizonError("incomplete sample cannot determine the next element")
    raise HorizonError(f"no known member above {after} below horizon {s.horizon}")


def sample(s: GroundSet, horizon: int) -> SampledPrefix:
    """The prefix of an exact set below ``horizon``."""
    if isinstance(s, SampledPrefix):
        if horizon > s.horizon:
            raise HorizonError(f"cannot extend sample beyond horizon {s.horizon}")
        return SampledPrefix(tuple(_listed(s, horizon)), horizon, s.complete, s.tail_gap)
    return SampledPrefix(tuple(iter_elements(s, horizon)), horizon)


def exact_window(*sets: GroundSet) -> int:
    """A bound past which every exact set in ``sets`` is jointly periodic.

    Two exact sets agree everywhere iff they agree below this bound.
    """
    views = [_periodic_view(s) for s in sets]
    return max(v.p for v in views) + math.lcm(*(v.q for v in views))


def is_subset(a: GroundSet, b: GroundSet) -> bool | None:
    """Exact inclusion for exact sets; three-valued on samples."""
    if is_exact(a) and is_exact(b):
        if isinstance(a, FiniteSet):
            return all(x in b for x in a.elements)
        bound = exact_window(a, b)
        return all(x in b for x in range(bound) if x in a)
    horizon = int(min(effective_horizon(a), effective_horizon(b)))
    for x in _listed(a, horizon):
        if contains(b, x) is False:
            return False
    return None


def same_set(a: GroundSet, b: GroundSet) -> bool:
    if not (is_exact(a) and is_exact(b)):
        raise TypeError("structural equality is only decidable for exact sets")
    return normalize(a) == normalize(b)
