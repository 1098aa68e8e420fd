"""Explicit constructions: strongly unembeddable pairs, descending chains, minimal sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from fembed.fe import fe_oracle_bruteforce
from fembed.report import LawReport
from fembed.setrep import (
    FiniteSet,
    GroundSet,
    HorizonError,
    SampledPrefix,
    contains,
    next_element,
    normalize,
)
from fembed.verdict import TriVerdict


@dataclass(frozen=True)
class UnembeddablePair:
    a_elements: tuple[int, ...]
    b_elements: tuple[int, ...]
    source: GroundSet
    horizon: int

    def a_side(self) -> SampledPrefix:
        """A-side as a sample.

        Every later a_j exceeds a_{n-1} + b_{n-1} + 1, so the prefix is exact
        below that bound; and a_j - a_i > b_{n-1} + 1 for j >= n.
        """
        a, b = self.a_elements, self.b_elements
        return SampledPrefix(a, a[-1] + b[-1] + 2, tail_gap=b[-1] + 1)

    def b_side(self) -> SampledPrefix:
        """B-side as a sample.

        Every later b_j exceeds b_{n-1} + a_n + 1 > 2 b_{n-1} + a_{n-1} + 2, and
        b_j - b_i > a_n + 1 > a_{n-1} + b_{n-1} + 2 for j >= n.
        """
        a, b = self.a_elements, self.b_elements
        return SampledPrefix(b, 2 * b[-1] + a[-1] + 3, tail_gap=a[-1] + b[-1] + 2)


def _next_in(x: GroundSet, after: int) -> int:
    nxt = next_element(x, after)
    if nxt is None:
        raise HorizonError(f"source set is exhausted after {after}")
    return nxt


def unembeddable_pair(x: GroundSet, count: int) -> UnembeddablePair:
    """First ``count`` terms of two interleaved sequences inside X.

    a_0, b_0 are the two least members of X; then a_{n+1} is the least member
    above a_n + b_n + 1 and b_{n+1} the least member above b_n + a_{n+1} + 1.
    Raises :class:`HorizonError` naming the shortfall when X runs out.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    x = normalize(x)
    a: list[int] = []
    b: list[int] = []
    try:
        a.append(_next_in(x, -1))
        b.append(_next_in(x, a[0]))
        while len(a) < count:
            a.append(_next_in(x, a[-1] + b[-1] + 1))
            b.append(_next_in(x, b[-1] + a[-1] + 1))
    except HorizonError as exc:
        raise HorizonError(
            f"needed {count} terms per side but X yielded only {len(a)} and {len(b)}: {exc}"
        ) from None
    return UnembeddablePair(tuple(a), tuple(b), x, a[-1] + b[-1] + 2)


def _differences(els) -> dict[int, tuple[int, int]]:
    out: dict[int, tuple[int, int]] = {}
    for i, lo in enumerate(els):
        for hi in els[i + 1:]:
            out.setdefault(hi - lo, (lo, hi))
    return out


def verify_pair(pair: UnembeddablePair) -> LawReport:
    """Disjointness, containment in the source, disjoint difference sets and growth guards.

    Every failed check is recorded in the witness; the outcome is fail if any is.
    """
    a, b = list(pair.a_elements), list(pair.b_elements)
    instance = f"A={FiniteSet(tuple(a))} B={FiniteSet(tuple(b))} in {pair.source}"
    problems: dict[str, object] = {}
    shared = sorted(set(a) & set(b))
    if shared:
        problems["shared_element"] = shared[0]
    outside = [v for v in a + b if contains(pair.source, v) is False]
    if outside:
        problems["not_in_source"] = outside[0]
    da, db = _differences(a), _differences(b)
    common = sorted(set(da) & set(db))
    if common:
        d = common[0]
        problems["common_difference"] = {"d": d, "a_pair": da[d], "b_pair": db[d]}
    for i in range(len(a) - 1):
        if not a[i + 1] > a[i] + b[i] + 1:
            problems.setdefault("growth_a", i + 1)
        if i + 1 < len(b) and not b[i + 1] > b[i] + a[i + 1] + 1:
            problems.setdefault("growth_b", i + 1)
    if problems:
        return LawReport("pair", instance, "fail", problems)
    return LawReport("pair", instance, "pass",
                     {"differences_a": sorted(da), "differences_b": sorted(db)})


@dataclass
class Chain:
    """Sets X_0 ⊃ X_1 ⊃ ... with certificates that X_i does not embed in X_{i+1}."""

    sets: list[GroundSet]
    certificates: list[TriVerdict]
    sides: list[str]
    error: str | None = None

    @property
    def steps(self) -> int:
        return len(self.sets) - 1


def _strict_subset_on_window(child: SampledPrefix, parent: GroundSet) -> bool:
    if any(contains(parent, v) is not True for v in child.elements):
        return False
    kids = set(child.elements)
    if isinstance(parent, SampledPrefix):
        horizon = min(child.horizon, parent.horizon)
        return any(v < horizon and v not in kids for v in parent.elements)
    horizon = child.horizon
    v = next_element(parent, -1)
    while v is not None and v < horizon:
        if v not in kids:
            return True
        v = next_element(parent, v)
    return False


def _certify(parent: GroundSet, child: SampledPrefix) -> TriVerdict:
    if isinstance(parent, SampledPrefix):
        window = parent.horizon
    else:
        window = child.horizon
    return fe_oracle_bruteforce(parent, child, max(window, 1), max(child.horizon, 1))


def descending_chain(x: GroundSet, depth: int, count: int) -> Chain:
    """X = X_0 ⊃ X_1 ⊃ ... ⊃ X_depth with X_i not finitely embeddable in X_{i+1}.

    Each step builds an unembeddable pair inside X_i and keeps the side on
    which the brute-force oracle certifies non-embeddability (A-side first).
    Earlier levels use larger counts so later levels have enough members.
    """
    if depth < 0 or count < 1:
        raise ValueError("depth must be >= 0 and count >= 1")
    chain = Chain([x], [], [])
    # a pair of c terms inside a sparse set consumes 2c members
    counts = [count] if depth else []
    for _ in range(depth - 1):
        counts.append(2 * counts[-1] + 1)
    counts.reverse()
    current = x
    for level, c in enumerate(counts, start=1):
        try:
            pair = unembeddable_pair(current, c)
        except HorizonError as exc:
            chain.error = f"depth {level}: {exc}"
            return chain
        chosen = None
        for name, side in (("A", pair.a_side()), ("B", pair.b_side())):
            cert = _certify(current, side)
            if cert.is_no and _strict_subset_on_window(side, current):
                chosen = (name, side, cert)
                break
        if chosen is None:
            chain.error = f"depth {level}: neither side certified"
            return chain
        name, side, cert = chosen
        chain.sets.append(side)
        chain.certificates.append(cert)
        chain.sides.append(name)
        current = side
    return chain


def minimal_sets(n: int, m: int) -> list[FiniteSet]:
    """Sets A ⊆ {0..m} with 0 ∈ A and |A| = n, in lexicographic order.

    These are, up to ≡fe, the minimal elements among sets with at least n
    members; there are C(m, n - 1) of them.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < n - 1:
        return []
    return [FiniteSet((0,) + rest) for rest in itertools.combinations(range(1, m + 1), n - 1)]
