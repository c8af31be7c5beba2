"""Decide whether a binary morphism generates an infinite Lyndon word.

The decision splits on the shape of the fixed point's prefix:

* a^omega is periodic, hence never Lyndon;
* a prefix a^i b (i >= 2) gives an infinite Lyndon word iff f preserves
  the order and f(a^i b) is a Lyndon word;
* a b^omega is always an infinite Lyndon word;
* a prefix a b^i a gives an infinite Lyndon word iff f preserves the
  order, f(a b^i) is a power u^k of a Lyndon word u distinct from
  a b^i, and, when i = 1, |u| > |f(b)|.

Every verdict carries machine-checkable evidence.  The companion
three-condition report (order preservation, aperiodicity, f^3(a) being
a prefix of a Lyndon word) is exposed by :func:`theorem_report`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .morphisms import (
    Morphism,
    NotProlongableError,
    PrefixShape,
    ShapeTag,
    apply,
    fixed_point_prefix,
    iterate,
    prefix_shape,
    preserves_order,
    prolongability,
)
from .words import is_lyndon, is_pre_lyndon, primitive_root

__all__ = [
    "Outcome",
    "CaseAaWitness",
    "CaseAbWitness",
    "Evidence",
    "Verdict",
    "PeriodicityKind",
    "Periodicity",
    "TheoremReport",
    "classify",
    "check_case_aa",
    "check_case_ab",
    "theorem_report",
    "REASON_LYNDON",
    "REASON_NOT_PROLONGABLE",
    "REASON_PURE_POWER",
    "REASON_ORDER",
    "REASON_AA_NOT_LYNDON",
    "REASON_AB_NOT_POWER",
    "REASON_AB_ROOT_EQUALS",
    "REASON_AB_LENGTH",
]


class Outcome(Enum):
    INFINITE_LYNDON = "infinite_lyndon"
    NOT_LYNDON = "not_lyndon"
    NOT_APPLICABLE = "not_applicable"


# Stable reason codes (one per verdict).
REASON_LYNDON = "lyndon"
REASON_NOT_PROLONGABLE = "not_prolongable"
REASON_PURE_POWER = "pure_power_of_a"
REASON_ORDER = "order_not_preserved"
REASON_AA_NOT_LYNDON = "aa_image_not_lyndon"
REASON_AB_NOT_POWER = "ab_image_not_lyndon_power"
REASON_AB_ROOT_EQUALS = "ab_root_equals_abi"
REASON_AB_LENGTH = "ab_length_condition"


@dataclass(frozen=True)
class CaseAaWitness:
    """Evidence for the a^i b case: the word f(a^i b) and its Lyndon status."""

    image: str
    image_is_lyndon: bool


@dataclass(frozen=True)
class CaseAbWitness:
    """Evidence for the a b^i case.

    ``image`` is f(a b^i) and ``root``/``exponent`` its primitive
    decomposition, so image = root^exponent always holds; the booleans
    record which of the case conditions the decomposition satisfies.
    The two length fields are only set when i = 1.
    """

    image: str
    root: str
    exponent: int
    root_is_lyndon: bool
    root_equals_ab_i: bool
    image_b_length: int | None = None
    length_ok: bool | None = None


@dataclass(frozen=True)
class Evidence:
    shape: PrefixShape | None
    order_preserving: bool
    case_witness: CaseAaWitness | CaseAbWitness | None


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    reason: str
    evidence: Evidence


def classify(f: Morphism) -> Verdict:
    """Total classification of an arbitrary binary morphism.

    Non-prolongable input yields NOT_APPLICABLE instead of an error so
    batch sweeps never abort.
    """
    order = preserves_order(f)
    if not prolongability(f).prolongable:
        return Verdict(
            Outcome.NOT_APPLICABLE,
            REASON_NOT_PROLONGABLE,
            Evidence(None, order, None),
        )
    shape = prefix_shape(f)
    if shape.tag is ShapeTag.PURE_POWER_OF_A:
        return Verdict(
            Outcome.NOT_LYNDON, REASON_PURE_POWER, Evidence(shape, order, None)
        )
    if shape.tag is ShapeTag.CASE_AA:
        return check_case_aa(f, shape.i)
    if shape.tag is ShapeTag.AB_OMEGA:
        return Verdict(
            Outcome.INFINITE_LYNDON, REASON_LYNDON, Evidence(shape, order, None)
        )
    return check_case_ab(f, shape.i)


def check_case_aa(f: Morphism, i: int) -> Verdict:
    """Verdict for a fixed point starting a^i b, i >= 2."""
    shape = prefix_shape(f)
    if shape != PrefixShape(ShapeTag.CASE_AA, i):
        raise ValueError(f"{f.spec()} does not generate an a^{i} b prefix")
    order = preserves_order(f)
    image = apply(f, "a" * i + "b")
    witness = CaseAaWitness(image=image, image_is_lyndon=is_lyndon(image))
    evidence = Evidence(shape, order, witness)
    if not order:
        return Verdict(Outcome.NOT_LYNDON, REASON_ORDER, evidence)
    if not witness.image_is_lyndon:
        return Verdict(Outcome.NOT_LYNDON, REASON_AA_NOT_LYNDON, evidence)
    return Verdict(Outcome.INFINITE_LYNDON, REASON_LYNDON, evidence)


def check_case_ab(f: Morphism, i: int) -> Verdict:
    """Verdict for a fixed point starting a b^i a, i >= 1.

    The exponent k and root u come from the primitive decomposition of
    f(a b^i) followed by a Lyndon check on the root; Lyndon words are
    primitive, so this is the only candidate decomposition.
    """
    shape = prefix_shape(f)
    if shape != PrefixShape(ShapeTag.CASE_AB, i):
        raise ValueError(f"{f.spec()} does not generate an a b^{i} a prefix")
    order = preserves_order(f)
    target = "a" + "b" * i
    image = apply(f, target)
    root, exponent = primitive_root(image)
    witness = CaseAbWitness(
        image=image,
        root=root,
        exponent=exponent,
        root_is_lyndon=is_lyndon(root),
        root_equals_ab_i=root == target,
        image_b_length=len(f.image_b) if i == 1 else None,
        length_ok=(len(root) > len(f.image_b)) if i == 1 else None,
    )
    evidence = Evidence(shape, order, witness)
    if not order:
        return Verdict(Outcome.NOT_LYNDON, REASON_ORDER, evidence)
    if not witness.root_is_lyndon:
        return Verdict(Outcome.NOT_LYNDON, REASON_AB_NOT_POWER, evidence)
    if witness.root_equals_ab_i:
        return Verdict(Outcome.NOT_LYNDON, REASON_AB_ROOT_EQUALS, evidence)
    if i == 1 and not witness.length_ok:
        return Verdict(Outcome.NOT_LYNDON, REASON_AB_LENGTH, evidence)
    return Verdict(Outcome.INFINITE_LYNDON, REASON_LYNDON, evidence)


class PeriodicityKind(Enum):
    APERIODIC = "aperiodic"
    PERIODIC = "periodic"
    PERIODIC_BY_THEOREM = "periodic_by_theorem"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Periodicity:
    kind: PeriodicityKind
    root: str | None = None
    window: int | None = None


@dataclass(frozen=True)
class TheoremReport:
    cond1_order: bool
    cond3_pre_lyndon_f3a: bool
    verdict: Verdict
    periodicity: Periodicity


def theorem_report(f: Morphism, window: int = 5000) -> TheoremReport:
    """Three-condition report for a prolongable morphism.

    Condition 1 is order preservation and condition 3 is f^3(a) being a
    prefix of a Lyndon word.  Periodicity is never decided by unbounded
    search: an infinite Lyndon fixed point is aperiodic by definition,
    and conditions 1 and 3 together with a negative verdict force
    periodicity.  In the remaining cases a bounded scan of the fixed
    point either finds a period attested twice or reports unknown.
    """
    if not prolongability(f).prolongable:
        raise NotProlongableError(f"{f.spec()} is not prolongable on a")
    cond1 = preserves_order(f)
    cond3 = is_pre_lyndon(iterate(f, "a", 3)) is not None
    verdict = classify(f)
    if verdict.outcome is Outcome.INFINITE_LYNDON:
        periodicity = Periodicity(PeriodicityKind.APERIODIC)
    elif cond1 and cond3:
        periodicity = Periodicity(PeriodicityKind.PERIODIC_BY_THEOREM)
    else:
        from .oracle import confirmed_period

        w = fixed_point_prefix(f, window)
        witness = confirmed_period(f, w, max_period=window // 2)
        if witness is not None:
            periodicity = Periodicity(PeriodicityKind.PERIODIC, root=witness.root)
        else:
            periodicity = Periodicity(PeriodicityKind.UNKNOWN, window=window)
    return TheoremReport(cond1, cond3, verdict, periodicity)
