import pytest

from lynmorph import (
    CaseAbWitness,
    Morphism,
    NotProlongableError,
    Outcome,
    PeriodicityKind,
    ShapeTag,
    apply,
    check_case_aa,
    check_case_ab,
    classify,
    is_lyndon,
    is_pre_lyndon,
    iter_morphisms,
    iterate,
    preserves_order,
    prefix_shape,
    prolongability,
    theorem_report,
)

from brute import words


@pytest.mark.parametrize(
    "ia, ib, outcome, reason",
    [
        ("aba", "bb", Outcome.INFINITE_LYNDON, "lyndon"),
        ("abb", "baa", Outcome.NOT_LYNDON, "ab_image_not_lyndon_power"),
        ("aab", "abaabab", Outcome.INFINITE_LYNDON, "lyndon"),
        ("abbab", "b", Outcome.INFINITE_LYNDON, "lyndon"),
        ("aba", "bbababb", Outcome.NOT_LYNDON, "ab_length_condition"),
        ("aba", "bab", Outcome.NOT_LYNDON, "ab_root_equals_abi"),
        ("ab", "b", Outcome.INFINITE_LYNDON, "lyndon"),
        ("ab", "a", Outcome.NOT_LYNDON, "order_not_preserved"),
        ("ba", "ab", Outcome.NOT_APPLICABLE, "not_prolongable"),
        ("aa", "bab", Outcome.NOT_LYNDON, "pure_power_of_a"),
        ("ab", "", Outcome.NOT_APPLICABLE, "not_prolongable"),
    ],
)
def test_classify(ia, ib, outcome, reason):
    verdict = classify(Morphism(ia, ib))
    assert verdict.outcome is outcome
    assert verdict.reason == reason


def test_case_ab_evidence_details():
    verdict = classify(Morphism("aba", "bbababb"))
    witness = verdict.evidence.case_witness
    assert isinstance(witness, CaseAbWitness)
    assert witness.image == "ababbababb"
    assert (witness.root, witness.exponent) == ("ababb", 2)
    assert witness.root_is_lyndon
    assert not witness.root_equals_ab_i
    assert witness.image_b_length == 7
    assert witness.length_ok is False

    verdict = classify(Morphism("aba", "bb"))
    witness = verdict.evidence.case_witness
    assert (witness.root, witness.exponent) == ("ababb", 1)
    assert witness.length_ok is True


def test_case_aa_evidence_details():
    verdict = classify(Morphism("aab", "abaabab"))
    witness = verdict.evidence.case_witness
    assert witness.image == apply(Morphism("aab", "abaabab"), "aab")
    assert witness.image_is_lyndon


@pytest.mark.parametrize(
    "ia, ib, i, outcome",
    [
        ("aab", "abaabab", 2, Outcome.INFINITE_LYNDON),
        ("aab", "b", 2, Outcome.INFINITE_LYNDON),
        ("aab", "aab", 2, Outcome.NOT_LYNDON),
    ],
)
def test_check_case_aa(ia, ib, i, outcome):
    assert check_case_aa(Morphism(ia, ib), i).outcome is outcome


@pytest.mark.parametrize(
    "ia, ib, i, outcome",
    [
        ("aba", "bb", 1, Outcome.INFINITE_LYNDON),
        ("aba", "bbababb", 1, Outcome.NOT_LYNDON),
        ("aba", "bab", 1, Outcome.NOT_LYNDON),
        ("abbab", "b", 2, Outcome.INFINITE_LYNDON),
    ],
)
def test_check_case_ab(ia, ib, i, outcome):
    assert check_case_ab(Morphism(ia, ib), i).outcome is outcome


def test_case_checks_reject_wrong_shape():
    with pytest.raises(ValueError):
        check_case_aa(Morphism("aba", "bb"), 2)
    with pytest.raises(ValueError):
        check_case_ab(Morphism("aab", "b"), 1)
    with pytest.raises(ValueError):
        check_case_ab(Morphism("aba", "bb"), 2)


def test_theorem_report_examples():
    report = theorem_report(Morphism("aba", "bab"))
    assert report.cond1_order and report.cond3_pre_lyndon_f3a
    assert report.verdict.outcome is Outcome.NOT_LYNDON
    assert report.periodicity.kind is PeriodicityKind.PERIODIC_BY_THEOREM

    report = theorem_report(Morphism("aba", "bb"))
    assert report.cond1_order and report.cond3_pre_lyndon_f3a
    assert report.periodicity.kind is PeriodicityKind.APERIODIC

    fib = Morphism("ab", "a")
    report = theorem_report(fib)
    assert not report.cond3_pre_lyndon_f3a
    assert is_pre_lyndon(iterate(fib, "a", 2)) is not None
    assert report.periodicity.kind is PeriodicityKind.UNKNOWN
    assert report.periodicity.window == 5000

    report = theorem_report(Morphism("aa", "b"))
    assert report.periodicity.kind is PeriodicityKind.PERIODIC_BY_THEOREM


def test_theorem_report_requires_prolongable():
    with pytest.raises(NotProlongableError):
        theorem_report(Morphism("ba", "ab"))


def test_nonpreservation_witness_image_recomputed():
    # order-preserving morphism generating an infinite Lyndon word whose
    # image of another infinite Lyndon word is not Lyndon
    f = Morphism("aab", "abaabab")
    image = apply(f, "abbabb") + f.image_b * 3
    assert image.startswith("aababaabab" + "abaabab" + "aab")
    prefix = image[:40]
    j = 12
    # suffix at 12 shares 11 letters with the prefix, then drops below it
    assert prefix[j:j + 11] == prefix[:11]
    assert prefix[j + 11] < prefix[11]
    assert classify(f).outcome is Outcome.INFINITE_LYNDON


def test_order_preservation_alone_does_not_suffice():
    f = Morphism("abb", "baa")
    assert preserves_order(f)
    assert classify(f).outcome is Outcome.NOT_LYNDON


def test_sweep_invariants():
    for f in iter_morphisms(4):
        verdict = classify(f)
        evidence = verdict.evidence
        if verdict.outcome is Outcome.NOT_APPLICABLE:
            assert verdict.reason == "not_prolongable"
            assert not prolongability(f).prolongable
            assert evidence.shape is None
            continue
        assert evidence.shape == prefix_shape(f)
        assert evidence.order_preserving == preserves_order(f)
        if verdict.outcome is Outcome.INFINITE_LYNDON:
            assert verdict.reason == "lyndon"
            # a generated infinite Lyndon word forces order preservation
            assert evidence.order_preserving
            # and every small iterate stays a prefix of a Lyndon word
            for n in range(7):
                assert is_pre_lyndon(iterate(f, "a", n)) is not None
        if isinstance(evidence.case_witness, CaseAbWitness):
            witness = evidence.case_witness
            i = evidence.shape.i
            assert witness.root * witness.exponent == witness.image
            assert witness.image == apply(f, "a" + "b" * i)
            if witness.root_is_lyndon:
                assert is_lyndon(witness.root)
            if evidence.order_preserving and i >= 2 and witness.root_is_lyndon:
                # wide roots: the root always outgrows the image of b
                assert len(witness.root) > len(f.image_b)


def test_theorem_report_invariants_over_sweep():
    for f in iter_morphisms(3):
        if not prolongability(f).prolongable:
            continue
        report = theorem_report(f, window=2000)
        if report.verdict.outcome is Outcome.INFINITE_LYNDON:
            assert report.cond1_order and report.cond3_pre_lyndon_f3a
            assert report.periodicity.kind is PeriodicityKind.APERIODIC
        elif report.cond1_order and report.cond3_pre_lyndon_f3a:
            assert report.periodicity.kind is PeriodicityKind.PERIODIC_BY_THEOREM


def test_order_preserving_images_of_lyndon_extensions_stay_lyndon():
    # mechanism behind the a^i b case: images of Lyndon words that start
    # with the checked block stay Lyndon
    for f in iter_morphisms(3):
        if not prolongability(f).prolongable or not preserves_order(f):
            continue
        shape = prefix_shape(f)
        if shape.tag is not ShapeTag.CASE_AA:
            continue
        block = "a" * shape.i + "b"
        if not is_lyndon(apply(f, block)):
            continue
        for v in words(6, min_len=0):
            w = block + v
            if is_lyndon(w):
                assert is_lyndon(apply(f, w)), (f.spec(), w)
