"""Command line interface.

Commands: classify, check, prefix, factorize, verify, enumerate.

Exit codes: 0 for an infinite Lyndon verdict (or agreement), 1 for a
negative verdict (or disagreement), 2 when the question does not apply
(or the evidence is inconclusive), 64 for usage and parse errors, 65
when a resource cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .classifier import (
    Evidence,
    Outcome,
    TheoremReport,
    Verdict,
    classify,
    theorem_report,
)
from .morphisms import (
    Morphism,
    MorphismParseError,
    NotProlongableError,
    fixed_point_prefix,
    iter_morphisms,
    parse_morphism,
)
from .oracle import OracleConfig, OracleReport, cross_validate
from .words import cfl_factorize

__all__ = ["main", "run", "build_report", "FORMAT_VERSION"]

FORMAT_VERSION = 1
PREFIX_CAP = 1_000_000
ENUMERATE_MAX_LEN = 5

EXIT_USAGE = 64
EXIT_RESOURCE = 65

_OUTCOME_EXIT = {
    Outcome.INFINITE_LYNDON: 0,
    Outcome.NOT_LYNDON: 1,
    Outcome.NOT_APPLICABLE: 2,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 by default; route everything through
    # UsageError so main() can return 64 instead.
    def error(self, message):
        raise UsageError(message)


def _shape_dict(evidence: Evidence) -> dict | None:
    if evidence.shape is None:
        return None
    return {"tag": evidence.shape.tag.value, "i": evidence.shape.i}


def _witness_dict(evidence: Evidence) -> dict | None:
    w = evidence.case_witness
    if w is None:
        return None
    if hasattr(w, "image_is_lyndon"):
        return {
            "kind": "case_aa",
            "image": w.image,
            "image_is_lyndon": w.image_is_lyndon,
        }
    return {
        "kind": "case_ab",
        "image": w.image,
        "root": w.root,
        "exponent": w.exponent,
        "root_is_lyndon": w.root_is_lyndon,
        "root_equals_ab_i": w.root_equals_ab_i,
        "image_b_length": w.image_b_length,
        "length_ok": w.length_ok,
    }


def _verdict_dict(verdict: Verdict) -> dict:
    return {
        "outcome": verdict.outcome.value,
        "reason": verdict.reason,
    }


def _theorem_dict(report: TheoremReport | None) -> dict | None:
    if report is None:
        return None
    return {
        "cond1_order": report.cond1_order,
        "cond3_pre_lyndon_f3a": report.cond3_pre_lyndon_f3a,
        "periodicity": {
            "kind": report.periodicity.kind.value,
            "root": report.periodicity.root,
            "window": report.periodicity.window,
        },
    }


def _oracle_dict(report: OracleReport | None, agreement: bool | None) -> dict | None:
    if report is None:
        return None
    violation = report.first_violation
    period = report.detected_period
    return {
        "window": report.window,
        "conclusion": report.conclusion.value,
        "lyndon_prefix_lengths": list(report.lyndon_prefix_lengths),
        "first_violation": None
        if violation is None
        else {
            "position": violation.position,
            "offset": violation.offset,
            "suffix_letter": violation.suffix_letter,
            "prefix_letter": violation.prefix_letter,
        },
        "detected_period": None
        if period is None
        else {
            "root": period.root,
            "exponent": period.exponent,
            "remainder": period.remainder,
        },
        "agreement": agreement,
    }


def build_report(
    f: Morphism,
    verdict: Verdict,
    theorem: TheoremReport | None = None,
    oracle: OracleReport | None = None,
    agreement: bool | None = None,
) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "morphism": {"a": f.image_a, "b": f.image_b},
        "verdict": _verdict_dict(verdict),
        "evidence": {
            "shape": _shape_dict(verdict.evidence),
            "order_preserving": verdict.evidence.order_preserving,
            "case_witness": _witness_dict(verdict.evidence),
        },
        "theorem": _theorem_dict(theorem),
        "oracle": _oracle_dict(oracle, agreement),
    }


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    print(f"morphism: a={report['morphism']['a']};b={report['morphism']['b']}")
    print(f"outcome: {report['verdict']['outcome']}")
    print(f"reason: {report['verdict']['reason']}")
    shape = report["evidence"]["shape"]
    if shape is not None:
        suffix = "" if shape["i"] is None else f" i={shape['i']}"
        print(f"shape: {shape['tag']}{suffix}")
    print(f"order_preserving: {str(report['evidence']['order_preserving']).lower()}")
    witness = report["evidence"]["case_witness"]
    if witness is not None:
        if witness["kind"] == "case_aa":
            print(
                f"witness: image={witness['image']} "
                f"lyndon={str(witness['image_is_lyndon']).lower()}"
            )
        else:
            parts = [
                f"image={witness['image']}",
                f"root={witness['root']}",
                f"exponent={witness['exponent']}",
                f"root_is_lyndon={str(witness['root_is_lyndon']).lower()}",
                f"root_equals_ab_i={str(witness['root_equals_ab_i']).lower()}",
            ]
            if witness["image_b_length"] is not None:
                parts.append(f"image_b_length={witness['image_b_length']}")
                parts.append(f"length_ok={str(witness['length_ok']).lower()}")
            print("witness: " + " ".join(parts))
    theorem = report["theorem"]
    if theorem is not None:
        periodicity = theorem["periodicity"]
        extra = ""
        if periodicity["root"] is not None:
            extra = f" root={periodicity['root']}"
        elif periodicity["window"] is not None:
            extra = f" window={periodicity['window']}"
        print(
            f"theorem: cond1_order={str(theorem['cond1_order']).lower()} "
            f"cond3_pre_lyndon_f3a={str(theorem['cond3_pre_lyndon_f3a']).lower()} "
            f"periodicity={periodicity['kind']}{extra}"
        )
    oracle = report["oracle"]
    if oracle is not None:
        lengths = oracle["lyndon_prefix_lengths"]
        agreement = oracle["agreement"]
        print(
            f"oracle: conclusion={oracle['conclusion']} window={oracle['window']} "
            f"lyndon_prefixes={len(lengths)} "
            f"largest={lengths[-1] if lengths else 0} "
            f"agreement={'none' if agreement is None else str(agreement).lower()}"
        )


def _theorem_or_none(f: Morphism) -> TheoremReport | None:
    try:
        return theorem_report(f)
    except NotProlongableError:
        return None


def _cmd_classify(args) -> int:
    f = parse_morphism(args.morphism)
    verdict = classify(f)
    oracle = agreement = None
    if args.oracle is not None and verdict.outcome is not Outcome.NOT_APPLICABLE:
        oracle, agreement = cross_validate(f, OracleConfig(window=args.oracle))
    _emit(build_report(f, verdict, _theorem_or_none(f), oracle, agreement), args.json)
    return _OUTCOME_EXIT[verdict.outcome]


def _cmd_check(args) -> int:
    f = parse_morphism(args.morphism)
    verdict = classify(f)
    _emit(build_report(f, verdict, _theorem_or_none(f)), args.json)
    return _OUTCOME_EXIT[verdict.outcome]


def _cmd_prefix(args) -> int:
    f = parse_morphism(args.morphism)
    if args.length > PREFIX_CAP:
        print(f"prefix length exceeds cap ({PREFIX_CAP})", file=sys.stderr)
        return EXIT_RESOURCE
    if args.length < 1:
        raise UsageError("prefix length must be positive")
    try:
        print(fixed_point_prefix(f, args.length))
    except NotProlongableError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    return 0


def _cmd_factorize(args) -> int:
    if (args.word is None) == (args.spec is None):
        raise UsageError("give either WORD or --spec")
    if args.spec is not None:
        if args.length is None:
            raise UsageError("--spec needs --length")
        if args.length > PREFIX_CAP:
            print(f"prefix length exceeds cap ({PREFIX_CAP})", file=sys.stderr)
            return EXIT_RESOURCE
        f = parse_morphism(args.spec)
        try:
            word = fixed_point_prefix(f, args.length)
        except NotProlongableError as exc:
            print(str(exc), file=sys.stderr)
            return 2
    else:
        word = args.word
    if not word:
        raise UsageError("cannot factorize the empty word")
    try:
        factors = cfl_factorize(word).factors
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        print(json.dumps({"format_version": FORMAT_VERSION, "factors": list(factors)}, indent=2))
    else:
        print(" ".join(factors))
    return 0


def _cmd_verify(args) -> int:
    f = parse_morphism(args.morphism)
    verdict = classify(f)
    if verdict.outcome is Outcome.NOT_APPLICABLE:
        _emit(build_report(f, verdict), args.json)
        return 2
    oracle, agreement = cross_validate(f, OracleConfig(window=args.window))
    _emit(build_report(f, verdict, _theorem_or_none(f), oracle, agreement), args.json)
    if agreement is None:
        return 2
    return 0 if agreement else 1


def _cmd_enumerate(args) -> int:
    if args.max_len > ENUMERATE_MAX_LEN:
        raise UsageError(f"--max-len capped at {ENUMERATE_MAX_LEN}")
    if args.max_len < 1:
        raise UsageError("--max-len must be at least 1")
    outcomes: dict[str, int] = {}
    reasons: dict[str, int] = {}
    agreements = {"true": 0, "false": 0, "inconclusive": 0}
    disagreements: list[str] = []
    total = 0
    for f in iter_morphisms(args.max_len):
        total += 1
        verdict = classify(f)
        outcomes[verdict.outcome.value] = outcomes.get(verdict.outcome.value, 0) + 1
        reasons[verdict.reason] = reasons.get(verdict.reason, 0) + 1
        if args.verify is not None and verdict.outcome is not Outcome.NOT_APPLICABLE:
            _, agreement = cross_validate(f, OracleConfig(window=args.verify))
            if agreement is None:
                agreements["inconclusive"] += 1
            elif agreement:
                agreements["true"] += 1
            else:
                agreements["false"] += 1
                disagreements.append(f.spec())
    summary = {
        "format_version": FORMAT_VERSION,
        "max_len": args.max_len,
        "total": total,
        "outcomes": dict(sorted(outcomes.items())),
        "reasons": dict(sorted(reasons.items())),
        "verify": None
        if args.verify is None
        else {
            "window": args.verify,
            "agreements": agreements,
            "disagreements": disagreements,
        },
    }
    if args.json:
        print(json.dumps(summary, indent=2))
    else:
        print(f"total: {total}")
        for name, count in summary["outcomes"].items():
            print(f"outcome {name}: {count}")
        for name, count in summary["reasons"].items():
            print(f"reason {name}: {count}")
        if args.verify is not None:
            print(
                f"verify window={args.verify} agree={agreements['true']} "
                f"disagree={agreements['false']} inconclusive={agreements['inconclusive']}"
            )
            for spec in disagreements:
                print(f"disagreement: {spec}")
    if args.verify is not None and disagreements:
        return 1
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="lynmorph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format_flags(p):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--json", action="store_true", help="emit a JSON report")
        group.add_argument(
            "--text", dest="json", action="store_false", help="emit text (default)"
        )
        p.set_defaults(json=False)

    p = sub.add_parser("classify", help="classify a morphism")
    p.add_argument("morphism", help="morphism as a=WORD;b=WORD")
    p.add_argument("--oracle", type=int, metavar="WINDOW", help="also cross-check on a window")
    add_format_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("check", help="three-condition report")
    p.add_argument("morphism")
    add_format_flags(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("prefix", help="prefix of the fixed point")
    p.add_argument("morphism")
    p.add_argument("length", type=int)
    p.set_defaults(func=_cmd_prefix)

    p = sub.add_parser("factorize", help="nonincreasing Lyndon factorization")
    p.add_argument("word", nargs="?", help="word over {a,b}")
    p.add_argument("--spec", help="factorize a fixed-point prefix of this morphism")
    p.add_argument("--length", type=int, help="prefix length for --spec")
    add_format_flags(p)
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("verify", help="cross-check classifier against a window")
    p.add_argument("morphism")
    p.add_argument("--window", type=int, default=5000)
    add_format_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="sweep all morphisms up to an image length")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--verify", type=int, metavar="WINDOW", help="cross-check each verdict")
    add_format_flags(p)
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MorphismParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
