"""Finite embeddability between subsets of N.

A <=fe B when every finite F inside A has a translate F + k (k >= 0)
inside B.  Decisions are exact for finite and ultimately periodic sets and
three-valued when a sampled prefix is involved: Yes always carries a
checkable translate, No always carries a finite failing subset (or a common
difference), and everything limited by a horizon is Unknown.
"""

from __future__ import annotations

import bisect
import itertools
from typing import Iterable, Sequence

from fembed.setrep import (
    FiniteSet,
    GroundSet,
    SampledPrefix,
    UltimatelyPeriodic,
    contains,
    difference_set,
    exact_window,
    intersect,
    is_exact,
    iter_elements,
    min_element,
    normalize,
    translate,
)
from fembed.verdict import TriVerdict, tri_and


def _candidate_translates(first: int, b: GroundSet, limit: int | None) -> Iterable[int]:
    """Translates k in increasing order that put ``first`` on a listed member of ``b``.

    For ultimately periodic ``b`` this is every k below ``limit``.
    """
    if isinstance(b, UltimatelyPeriodic):
        return range(limit)
    els = b.elements
    start = bisect.bisect_left(els, first)
    ks = (x - first for x in els[start:])
    if limit is None:
        return ks
    return (k for k in ks if k < limit)


def _fits(f: Sequence[int], k: int, b: GroundSet) -> bool:
    return all(contains(b, x + k) is True for x in f)


def _search_bound(f: Sequence[int], b: GroundSet) -> int | None:
    """Exclusive bound on translates that can possibly work, if one is known."""
    if isinstance(b, UltimatelyPeriodic):
        # every k >= p is equivalent to some k in [p, p + q)
        return b.p + b.q
    return None


def _refutes_beyond_horizon(f: Sequence[int], b: SampledPrefix) -> bool:
    """True when every translate of f that reaches the unknown region is impossible."""
    if not b.complete:
        return False
    if len(f) >= 2 and f[-1] - f[0] <= b.tail_gap:
        return True
    return False


def _least_translate(f: Sequence[int], b: GroundSet) -> tuple[bool | None, int | None]:
    """(True, k) with the least k, (False, None) when provably none, else (None, None)."""
    if not f:
        return True, 0
    if isinstance(b, FiniteSet) and not b.elements:
        return False, None
    for k in _candidate_translates(f[0], b, _search_bound(f, b)):
        if _fits(f, k, b):
            return True, k
    if is_exact(b):
        return False, None
    return (False, None) if _refutes_beyond_horizon(f, b) else (None, None)


def _shortest_failing_prefix(f: Sequence[int], b: GroundSet) -> FiniteSet:
    """Shortest prefix of f that provably has no translate in b (f itself must fail)."""
    lo, hi = 1, len(f)
    while lo < hi:
        mid = (lo + hi) // 2
        if _least_translate(f[:mid], b)[0] is False:
            hi = mid
        else:
            lo = mid + 1
    return FiniteSet(tuple(f[:lo]))


def fe_finite_into(f: FiniteSet | Iterable[int], b: GroundSet) -> TriVerdict:
    """Least k with F + k inside B.

    >>> from fembed.setrep import ODDS
    >>> fe_finite_into(FiniteSet((0, 2, 4)), ODDS).witness
    1
    """
    if not isinstance(f, FiniteSet):
        f = FiniteSet.of(f)
    els = f.elements
    found, k = _least_translate(els, b)
    if found:
        return TriVerdict.yes(k, f"{f}+{k} is contained in the target")
    if found is False:
        cert = _shortest_failing_prefix(els, b) if els else f
        return TriVerdict.no(cert, f"no translate of {cert} lies in the target")
    return TriVerdict.unknown(
        f"no translate of {f} found below horizon {b.horizon}",
    )


def _fe_sampled(a: GroundSet, b: GroundSet) -> TriVerdict:
    """Either operand is a sample; A is infinite or sampled, so only No can be definite."""
    if is_exact(b):
        els = list(a.elements)
        if not els:
            return TriVerdict.unknown(f"no member of A known below horizon {a.horizon}")
        found, k = _least_translate(els, b)
        if found is False:
            cert = _shortest_failing_prefix(els, b)
            return TriVerdict.no(cert, f"known prefix {cert} of A has no translate in B")
        return TriVerdict.unknown(
            f"known prefix of A embeds (k={k}); A is not known beyond horizon {a.horizon}",
            witness=k,
        )
    # only prefixes narrow enough for the tail-gap argument can fail definitively
    if isinstance(a, SampledPrefix):
        if not a.elements:
            return TriVerdict.unknown(f"no member of A known below horizon {a.horizon}")
        limit = a.elements[0] + b.tail_gap + 1
        narrow = [x for x in a.elements if x < limit]
    else:
        first = min_element(a)
        narrow = list(iter_elements(a, first + b.tail_gap + 1))
    if len(narrow) >= 2 and _least_translate(narrow, b)[0] is False:
        cert = _shortest_failing_prefix(narrow, b)
        return TriVerdict.no(cert, f"{cert} has no translate in B (tail gap {b.tail_gap})")
    return TriVerdict.unknown(f"undecided below horizon {b.horizon}")


def fe_decide(a: GroundSet, b: GroundSet) -> TriVerdict:
    """Decide A <=fe B.

    For infinite ultimately periodic A the valid translates of the prefixes
    A ∩ [0, n) stop shrinking once n reaches max(p_A, p_B) + lcm(q_A, q_B),
    so A <=fe B iff a single k puts all of A inside B, and the least such k
    is below p_B + q_B.
    """
    a, b = normalize(a), normalize(b)
    if isinstance(a, FiniteSet):
        return fe_finite_into(a, b)
    if not (is_exact(a) and is_exact(b)):
        return _fe_sampled(a, b)
    if isinstance(b, FiniteSet):
        prefix = []
        for x in iter_elements(a):
            prefix.append(x)
            if len(prefix) > len(b):
                break
        cert = _shortest_failing_prefix(prefix, b)
        return TriVerdict.no(cert, "an infinite set cannot embed in a finite one")
    window = exact_window(a, b)
    prefix = list(iter_elements(a, window))
    found, k = _least_translate(prefix, b)
    if found:
        return TriVerdict.yes(k, f"A+{k} is contained in B")
    cert = _shortest_failing_prefix(prefix, b)
    return TriVerdict.no(cert, f"{cert} has no translate in B")


def fe_equiv(a: GroundSet, b: GroundSet) -> TriVerdict:
    """A ≡fe B; a Yes carries the pair (k for A into B, k for B into A)."""
    return tri_and(fe_decide(a, b), fe_decide(b, a))


def _two_point_translate(a: GroundSet, b: GroundSet) -> tuple[FiniteSet, int] | None | bool:
    """A pair C inside A and k with C + k inside B; None if provably absent, False if undecided."""
    if is_exact(a) and is_exact(b):
        if isinstance(b, FiniteSet):
            ks = range(b.elements[-1] + 1) if b.elements else range(0)
        else:
            # for k >= p_B, |(A + k) ∩ B| >= 2 depends only on k mod q_B
            ks = range(b.p + b.q)
        for k in ks:
            hits = list(itertools.islice(iter_elements(intersect(translate(a, k), b)), 2))
            if len(hits) == 2:
                return FiniteSet((hits[0] - k, hits[1] - k)), k
        return None
    # on samples, compare the least lower witness of each difference in A with the
    # largest lower witness in B among known members
    a_known = a.elements if isinstance(a, SampledPrefix) else tuple(iter_elements(a, b.horizon))
    b_known = b.elements if isinstance(b, SampledPrefix) else tuple(iter_elements(b, a.horizon))
    lowest: dict[int, int] = {}
    for i, x in enumerate(a_known):
        for y in a_known[i + 1:]:
            lowest.setdefault(y - x, x)
    for i, x in enumerate(b_known):
        for y in b_known[i + 1:]:
            lo = lowest.get(y - x)
            if lo is not None and lo <= x:
                return FiniteSet((lo, lo + y - x)), x - lo
    return False


def strongly_non_fe(a: GroundSet, b: GroundSet, horizon: int = 10_000) -> TriVerdict:
    """No two-element subset of A embeds in B.

    Equivalently, |(A + k) ∩ B| <= 1 for every k >= 0.  A No carries the
    embeddable pair of A.  This is not symmetric: {1, 2} is strongly non f.e.
    in {0, 1} but not conversely.
    """
    a, b = normalize(a), normalize(b)
    found = _two_point_translate(a, b)
    if found is None:
        return TriVerdict.yes(reason="no two members of A translate into B together")
    if found is False:
        return TriVerdict.unknown("no embeddable pair among the known members; later members unknown")
    pair, k = found
    return TriVerdict.no(pair, f"{pair}+{k} is contained in B")


def mutually_strongly_unembeddable(a: GroundSet, b: GroundSet, horizon: int = 10_000) -> TriVerdict:
    """Neither set strongly embeds a pair into the other.

    A common difference d, realised by (a, a+d) and (b, b+d), embeds the pair
    with the smaller base into the other set, so this holds iff the positive
    difference sets are disjoint.  No carries the least common difference.
    """
    da, db = difference_set(a, horizon), difference_set(b, horizon)
    common = intersect(da, db)
    if is_exact(common):
        d = min_element(common)
        if d is None:
            return TriVerdict.yes(reason="difference sets are disjoint")
        return TriVerdict.no(d, f"both sets realise the difference {d}")
    if common.elements:
        d = common.elements[0]
        return TriVerdict.no(d, f"both sets realise the difference {d}")
    return TriVerdict.unknown(
        f"no common difference below {common.horizon}; larger differences not known",
    )


def _oracle_exhaustive(f: Sequence[int], b: GroundSet, kmax: int) -> bool:
    """Whether trying every k <= kmax rules out all translates of f."""
    if isinstance(b, FiniteSet):
        return not b.elements or kmax >= b.elements[-1]
    if isinstance(b, UltimatelyPeriodic):
        return kmax >= b.p + b.q - 1
    return _refutes_beyond_horizon(f, b) and kmax >= b.horizon - 1 - f[-1]


def fe_oracle_bruteforce(a: GroundSet, b: GroundSet, horizon: int, kmax: int) -> TriVerdict:
    """Check every prefix A ∩ [0, n], n <= horizon, against every translate k <= kmax.

    Membership is tested point by point; no periodicity of A is used.  No is
    definitive only when the k-range provably covers all translates.  Yes is
    definitive only when A lies entirely inside [0, horizon].
    """
    if horizon < 1 or kmax < 1:
        raise ValueError("horizon and kmax must be >= 1")
    if isinstance(a, SampledPrefix):
        top = min(horizon + 1, a.horizon)
        source = iter(a.elements[: bisect.bisect_left(a.elements, top)])
        whole = False
    else:
        a = normalize(a)
        source = iter_elements(a, horizon + 1)
        whole = isinstance(a, FiniteSet) and (not a.elements or a.elements[-1] <= horizon)
    first = next(source, None)
    if first is None:
        if whole:
            return TriVerdict.yes(0, "A is empty")
        return TriVerdict.unknown(f"A has no known member up to {horizon}")

    alive: list[int] = []
    pending: list[int] = []
    for k in _candidate_translates(first, b, kmax + 1):
        v = contains(b, first + k)
        if v is True:
            alive.append(k)
        elif v is None:
            pending.append(k)
    prefix = [first]
    while True:
        if not alive:
            cert = FiniteSet(tuple(prefix))
            if _oracle_exhaustive(prefix, b, kmax):
                return TriVerdict.no(cert, f"no translate k <= {kmax} of {cert} lies in B")
            return TriVerdict.unknown(
                f"no translate k <= {kmax} found for {cert}; range not exhaustive",
            )
        x = next(source, None)
        if x is None:
            break
        prefix.append(x)
        next_alive, next_pending = [], []
        for k in alive:
            v = contains(b, x + k)
            if v is True:
                next_alive.append(k)
            elif v is None:
                next_pending.append(k)
        for k in pending:
            if contains(b, x + k) is not False:
                next_pending.append(k)
        alive, pending = next_alive, next_pending
    if whole:
        return TriVerdict.yes(alive[0], f"A+{alive[0]} is contained in B")
    return TriVerdict.unknown(
        f"every prefix up to {horizon} embeds (k={alive[0]}); A continues beyond",
        witness=alive[0],
    )
