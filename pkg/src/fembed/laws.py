"""Checkers for the set-level laws of finite embeddability, and a seeded corpus runner.

Each checker returns a :class:`~fembed.report.LawReport`.  ``vacuous``
means the law's hypothesis is definitely false; ``unknown`` means some part
of it could not be decided within the horizon.  A ``fail`` always carries
a finite counterexample.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from fembed.combinatorics import (
    contains_k_ap,
    is_piecewise_syndetic,
    is_thick,
    upper_banach_density,
)
from fembed.constructions import unembeddable_pair, verify_pair
from fembed.fe import fe_decide
from fembed.report import LawReport
from fembed.setrep import (
    NAT,
    GroundSet,
    UltimatelyPeriodic,
    difference_set,
    exact_window,
    is_exact,
    is_subset,
    normalize,
    shift_down_intersect,
    translate,
)
from fembed.verdict import TriVerdict

AP_MAX_K = 8
SHIFT_FAMILY = tuple(
    (0,) + rest for size in range(3) for rest in itertools.combinations(range(1, 5), size)
)
_RANK = {"fail": 3, "unknown": 2, "pass": 1, "vacuous": 0}


@dataclass(frozen=True)
class InstanceConfig:
    seed: int = 1
    max_preperiod: int = 6
    max_period: int = 10
    horizon: int = 1000
    corpus_size: int = 50

    def __post_init__(self):
        if min(self.max_preperiod, self.max_period, self.horizon) < 1:
            raise ValueError("preperiod, period and horizon bounds must be >= 1")
        if self.seed < 0 or self.corpus_size < 0:
            raise ValueError("seed and corpus_size must be natural numbers")


@lru_cache(maxsize=200_000)
def _fe(a: GroundSet, b: GroundSet) -> TriVerdict:
    return fe_decide(a, b)


def _worst(outcomes) -> str:
    return max(outcomes, key=_RANK.__getitem__, default="vacuous")


def _implication(premise: TriVerdict, conclusion: TriVerdict) -> str:
    if not premise.is_yes:
        return "vacuous" if premise.is_no else "unknown"
    if conclusion.is_yes:
        return "pass"
    return "fail" if conclusion.is_no else "unknown"


def _describe(*sets: GroundSet) -> str:
    return " ".join(f"{name}={s}" for name, s in zip("ABC", sets))


def check_prop6(a: GroundSet, b: GroundSet, cfg: InstanceConfig | None = None) -> LawReport:
    """If A <=fe B: PS, k-APs (k <= 8), upper Banach density, differences and shifted
    intersections all pass from A to B."""
    cfg = cfg or InstanceConfig()
    instance = _describe(a, b)
    hyp = _fe(a, b)
    if not hyp.is_yes:
        outcome = "vacuous" if hyp.is_no else "unknown"
        return LawReport("prop6", instance, outcome, {"hypothesis": str(hyp)})

    clauses: dict[str, str] = {}
    evidence: dict[str, object] = {"k": hyp.witness}

    clauses["ps"] = _implication(is_piecewise_syndetic(a), is_piecewise_syndetic(b))

    ap = []
    for k in range(1, AP_MAX_K + 1):
        res = _implication(contains_k_ap(a, k, cfg.horizon), contains_k_ap(b, k, cfg.horizon))
        ap.append(res)
        if res == "fail":
            evidence["ap_k"] = k
    clauses["ap"] = _worst(ap)

    if is_exact(a) and is_exact(b):
        bd_a, bd_b = upper_banach_density(a).value, upper_banach_density(b).value
        evidence["density"] = (bd_a, bd_b)
        clauses["density"] = "pass" if bd_a <= bd_b else "fail"
        da, db = difference_set(a), difference_set(b)
        sub = is_subset(da, db)
        clauses["differences"] = "pass" if sub else "fail"
        if not sub:
            evidence["difference"] = next(
                d for d in range(1, exact_window(da, db)) if d in da and d not in db
            )
    else:
        clauses["density"] = clauses["differences"] = "unknown"

    shifted = []
    for g in SHIFT_FAMILY:
        v = _fe(shift_down_intersect(a, g), shift_down_intersect(b, g))
        if v.is_no:
            shifted.append("fail")
            evidence["shift_G"] = g
            evidence["shift_certificate"] = v.witness
        else:
            shifted.append("pass" if v.is_yes else "unknown")
    clauses["shifts"] = _worst(shifted)

    evidence["clauses"] = clauses
    return LawReport("prop6", instance, _worst(clauses.values()), evidence)


def check_lemma_basico(a: GroundSet, b: GroundSet) -> LawReport:
    """(i) B not<=fe A and B <=fe A+1 give B ⊆ A+1; (ii) A <=fe B and A+1 not<=fe B give A ⊆ B."""
    a1 = translate(a, 1)
    clauses = {
        "i": _subset_clause(_fe(b, a), _fe(b, a1), b, a1),
        "ii": _subset_clause(_fe(a1, b), _fe(a, b), a, b),
    }
    return LawReport("lemma_basico", _describe(a, b), _worst(clauses.values()), {"clauses": clauses})


def _subset_clause(refused: TriVerdict, embedded: TriVerdict, small: GroundSet, big: GroundSet) -> str:
    if refused.is_yes or embedded.is_no:
        return "vacuous"
    if refused.is_unknown or embedded.is_unknown:
        return "unknown"
    sub = is_subset(small, big)
    if sub is None:
        return "unknown"
    return "pass" if sub else "fail"


def check_sandwich(a: GroundSet, b: GroundSet) -> LawReport:
    """A <=fe B <=fe A+1 forces B ≡fe A or B ≡fe A+1."""
    a1 = translate(a, 1)
    instance = _describe(a, b)
    left, right = _fe(a, b), _fe(b, a1)
    if left.is_no or right.is_no:
        return LawReport("sandwich", instance, "vacuous")
    if not (left.is_yes and right.is_yes):
        return LawReport("sandwich", instance, "unknown")
    with_a = _fe(b, a)
    with_a1 = _fe(a1, b)
    if with_a.is_yes:
        return LawReport("sandwich", instance, "pass", {"equivalent_to": "A", "k": (left.witness, with_a.witness)})
    if with_a1.is_yes:
        return LawReport("sandwich", instance, "pass", {"equivalent_to": "A+1", "k": (with_a1.witness, right.witness)})
    if with_a.is_no and with_a1.is_no:
        return LawReport("sandwich", instance, "fail",
                         {"B_not_into_A": with_a.witness, "A+1_not_into_B": with_a1.witness})
    return LawReport("sandwich", instance, "unknown")


def check_thickness(a: GroundSet, b: GroundSet) -> LawReport:
    """Thick B receives every A; a non-thick B does not receive N."""
    thick = is_thick(b)
    if thick.is_yes:
        outcome = _implication(thick, _fe(a, b))
        return LawReport("thick_maximal", _describe(a, b), outcome)
    if thick.is_no:
        refused = _fe(NAT, b)
        outcome = "pass" if refused.is_no else ("fail" if refused.is_yes else "unknown")
        return LawReport("thick_maximal", _describe(a, b), outcome, {"N_certificate": refused.witness})
    return LawReport("thick_maximal", _describe(a, b), "unknown")


def check_reflexive(a: GroundSet) -> LawReport:
    v = _fe(a, a)
    if v.is_yes and v.witness == 0:
        outcome = "pass"
    elif v.is_unknown and not is_exact(a):
        outcome = "unknown"
    else:
        outcome = "fail"
    return LawReport("reflexive", _describe(a), outcome, {"k": v.witness})


def check_transitive(a: GroundSet, b: GroundSet, c: GroundSet) -> LawReport:
    ab, bc = _fe(a, b), _fe(b, c)
    premise = TriVerdict.yes() if ab.is_yes and bc.is_yes else (
        TriVerdict.no() if ab.is_no or bc.is_no else TriVerdict.unknown("premise undecided"))
    ac = _fe(a, c)
    return LawReport("transitive", _describe(a, b, c), _implication(premise, ac),
                     {"k": (ab.witness, bc.witness, ac.witness)})


def check_pair_construction(x: GroundSet, count: int = 6) -> LawReport:
    pair = unembeddable_pair(x, count)
    return verify_pair(pair)


def random_set(rng: random.Random, max_preperiod: int, max_period: int) -> GroundSet:
    """A random ultimately periodic set (finite when the drawn pattern is empty)."""
    p = rng.randint(0, max_preperiod)
    q = rng.randint(1, max_period)
    bits = tuple(rng.randint(0, 1) for _ in range(p))
    density = rng.choice((0.25, 0.5, 0.75))
    pattern = frozenset(r for r in range(q) if rng.random() < density)
    if rng.random() < 0.1:
        pattern = frozenset()
    return normalize(UltimatelyPeriodic(bits, q, pattern))


def generate_corpus(cfg: InstanceConfig) -> list[GroundSet]:
    rng = random.Random(cfg.seed)
    return [random_set(rng, cfg.max_preperiod, cfg.max_period) for _ in range(cfg.corpus_size)]


def run_corpus(cfg: InstanceConfig, corpus: list[GroundSet] | None = None) -> list[LawReport]:
    """Every law on every ordered pair of the corpus, plus translate partners,
    sampled transitivity chains and pair constructions.  Deterministic in (seed, cfg).
    """
    if corpus is None:
        corpus = generate_corpus(cfg)
    tagged: list[tuple[tuple, LawReport]] = []

    def add(tag, report):
        tagged.append((tag, report))

    for i, a in enumerate(corpus):
        add((0, i), check_reflexive(a))
        if isinstance(a, UltimatelyPeriodic):
            add((1, i), check_pair_construction(a))

    pairs = [((i, j), corpus[i], corpus[j]) for i in range(len(corpus)) for j in range(len(corpus))]
    for i, a in enumerate(corpus):
        for shift in (1, 2):
            moved = translate(a, shift)
            pairs.append(((i, -shift), a, moved))
            pairs.append(((-shift, i), moved, a))
    for key, a, b in pairs:
        add((2, key), check_prop6(a, b, cfg))
        add((3, key), check_lemma_basico(a, b))
        add((4, key), check_sandwich(a, b))
        add((5, key), check_thickness(a, b))

    rng = random.Random(cfg.seed * 7919 + 1)
    n = len(corpus)
    ups = {i: [j for j in range(n) if _fe(corpus[i], corpus[j]).is_yes] for i in range(n)}
    starts = [i for i in range(n) if ups[i]]
    for t in range(6 * n if starts else 0):
        i = rng.choice(starts)
        j = rng.choice(ups[i])
        if not ups[j]:
            continue
        k = rng.choice(ups[j])
        add((6, t), check_transitive(corpus[i], corpus[j], corpus[k]))

    tagged.sort(key=lambda item: item[0])
    return [r for _, r in tagged]


def summarize(reports: list[LawReport]) -> dict[str, Counter]:
    """Outcome counts per law."""
    out: dict[str, Counter] = {}
    for r in reports:
        out.setdefault(r.law, Counter())[r.outcome] += 1
    return out
