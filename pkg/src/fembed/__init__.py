"""Exact and horizon-bounded decisions for finite embeddability on subsets of N."""

from fembed.combinatorics import (
    ApWitness,
    DensityReport,
    contains_k_ap,
    is_piecewise_syndetic,
    is_syndetic,
    is_thick,
    longest_ap,
    upper_banach_density,
)
from fembed.constructions import (
    Chain,
    UnembeddablePair,
    descending_chain,
    minimal_sets,
    unembeddable_pair,
    verify_pair,
)
from fembed.dsl import ParseError, evaluate, parse, parse_set, to_text
from fembed.fe import (
    fe_decide,
    fe_equiv,
    fe_finite_into,
    fe_oracle_bruteforce,
    mutually_strongly_unembeddable,
    strongly_non_fe,
)
from fembed.laws import (
    InstanceConfig,
    check_lemma_basico,
    check_prop6,
    check_sandwich,
    run_corpus,
)
from fembed.report import LawReport
from fembed.setrep import (
    EMPTY,
    EVENS,
    NAT,
    ODDS,
    FiniteSet,
    GroundSet,
    HorizonError,
    SampledPrefix,
    UltimatelyPeriodic,
    difference_set,
    elements_below,
    intersect,
    member,
    min_element,
    normalize,
    shift_down_intersect,
    translate,
    union,
    up,
)
from fembed.verdict import Outcome, TriVerdict

__version__ = "0.1.0"

__all__ = [
    "ApWitness",
    "Chain",
    "DensityReport",
    "EMPTY",
    "EVENS",
    "FiniteSet",
    "GroundSet",
    "HorizonError",
    "InstanceConfig",
    "LawReport",
    "NAT",
    "ODDS",
    "Outcome",
    "ParseError",
    "SampledPrefix",
    "TriVerdict",
    "UltimatelyPeriodic",
    "UnembeddablePair",
    "check_lemma_basico",
    "check_prop6",
    "check_sandwich",
    "contains_k_ap",
    "descending_chain",
    "difference_set",
    "elements_below",
    "evaluate",
    "fe_decide",
    "fe_equiv",
    "fe_finite_into",
    "fe_oracle_bruteforce",
    "intersect",
    "is_piecewise_syndetic",
    "is_syndetic",
    "is_thick",
    "longest_ap",
    "member",
    "min_element",
    "minimal_sets",
    "mutually_strongly_unembeddable",
    "normalize",
    "parse",
    "parse_set",
    "run_corpus",
    "shift_down_intersect",
    "strongly_non_fe",
    "to_text",
    "translate",
    "unembeddable_pair",
    "union",
    "up",
    "upper_banach_density",
    "verify_pair",
]
