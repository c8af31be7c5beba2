"""Lyndon-word analysis of binary morphisms.

A library and CLI that decide whether an endomorphism of {a, b}*
prolongable on a generates an infinite Lyndon word, with machine-checkable
evidence and an independent brute-force cross-check on finite windows.
"""

from .words import (
    BINARY,
    EQUAL,
    GREATER,
    LESS,
    FactorizationResult,
    OrderedAlphabet,
    PeriodWitness,
    PreLyndonWitness,
    cfl_factorize,
    is_lyndon,
    is_power_of_lyndon,
    is_pre_lyndon,
    lex_compare,
    primitive_root,
)
from .morphisms import (
    Morphism,
    MorphismParseError,
    NotProlongableError,
    PrefixShape,
    PrefixStream,
    ProlongabilityReport,
    ShapeTag,
    apply,
    fixed_point_prefix,
    is_lyndon_morphism,
    iter_morphisms,
    iterate,
    parse_morphism,
    prefix_shape,
    preserves_order,
    prolongability,
)
from .classifier import (
    CaseAaWitness,
    CaseAbWitness,
    Evidence,
    Outcome,
    Periodicity,
    PeriodicityKind,
    TheoremReport,
    Verdict,
    check_case_aa,
    check_case_ab,
    classify,
    theorem_report,
)
from .oracle import (
    Conclusion,
    OracleConfig,
    OracleReport,
    SuffixViolation,
    cross_validate,
    detect_period,
    find_suffix_violation,
    lyndon_prefix_lengths,
    pre_lyndon_oracle,
    window_report,
)

__version__ = "0.1.0"

__all__ = [
    "BINARY",
    "EQUAL",
    "GREATER",
    "LESS",
    "CaseAaWitness",
    "CaseAbWitness",
    "Conclusion",
    "Evidence",
    "FactorizationResult",
    "Morphism",
    "MorphismParseError",
    "NotProlongableError",
    "OracleConfig",
    "OracleReport",
    "OrderedAlphabet",
    "Outcome",
    "PeriodWitness",
    "Periodicity",
    "PeriodicityKind",
    "PreLyndonWitness",
    "PrefixShape",
    "PrefixStream",
    "ProlongabilityReport",
    "ShapeTag",
    "SuffixViolation",
    "TheoremReport",
    "Verdict",
    "apply",
    "cfl_factorize",
    "check_case_aa",
    "check_case_ab",
    "classify",
    "cross_validate",
    "detect_period",
    "find_suffix_violation",
    "fixed_point_prefix",
    "is_lyndon",
    "is_lyndon_morphism",
    "is_power_of_lyndon",
    "is_pre_lyndon",
    "iter_morphisms",
    "iterate",
    "lex_compare",
    "lyndon_prefix_lengths",
    "parse_morphism",
    "prefix_shape",
    "preserves_order",
    "primitive_root",
    "pre_lyndon_oracle",
    "prolongability",
    "theorem_report",
    "window_report",
]
