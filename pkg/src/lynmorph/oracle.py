"""Brute-force finite-window verification, independent of the classifier.

Everything here looks only at materialized letters: Lyndon prefixes of a
window, the first suffix that is strictly smaller than the window, a
period attested at least twice, and an exhaustive extension search for
prefixes of Lyndon words.  :func:`cross_validate` runs the window
analysis against the closed-form verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .classifier import Outcome, classify
from .morphisms import Morphism, apply, fixed_point_prefix
from .words import BINARY, OrderedAlphabet, PeriodWitness

__all__ = [
    "OracleConfig",
    "SuffixViolation",
    "Conclusion",
    "OracleReport",
    "lyndon_prefix_lengths",
    "find_suffix_violation",
    "detect_period",
    "confirmed_period",
    "pre_lyndon_oracle",
    "window_report",
    "cross_validate",
]

PRE_LYNDON_LENGTH_GUARD = 14


def default_extension_bound(length: int) -> int:
    return length + 1


@dataclass(frozen=True)
class OracleConfig:
    window: int = 5000
    min_lyndon_prefixes: int = 3
    pre_lyndon_extension_bound: Callable[[int], int] = default_extension_bound


@dataclass(frozen=True)
class SuffixViolation:
    """Transcript of a suffix comparing strictly smaller than the window.

    The suffix starting at ``position`` agrees with the window for
    ``offset`` letters and then carries ``suffix_letter`` where the
    window carries the larger ``prefix_letter``.
    """

    position: int
    offset: int
    suffix_letter: str
    prefix_letter: str


class Conclusion(Enum):
    LOOKS_LYNDON = "looks_lyndon"
    REFUTED = "refuted_at_position"
    PERIODIC = "periodic_within_window"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class OracleReport:
    window: int
    lyndon_prefix_lengths: tuple[int, ...]
    first_violation: SuffixViolation | None
    detected_period: PeriodWitness | None
    conclusion: Conclusion


def _z_array(s: str) -> list[int]:
    """z[j] = length of the longest common prefix of s and s[j:]."""
    n = len(s)
    z = [0] * n
    if n:
        z[0] = n
    left = right = 0
    for j in range(1, n):
        k = min(right - j, z[j - left]) if j < right else 0
        while j + k < n and s[k] == s[j + k]:
            k += 1
        z[j] = k
        if j + k > right:
            left, right = j, j + k
    return z


def lyndon_prefix_lengths(
    w: str, alphabet: OrderedAlphabet = BINARY
) -> list[int]:
    """All L such that the length-L prefix of w is a Lyndon word, ascending.

    A suffix at position j rules out the prefix lengths L in (j, j+z[j]]
    (those prefixes have a border) and, when the first difference makes
    the suffix smaller, every L beyond as well.  Interval bookkeeping
    over the z-array covers all suffixes in linear time.
    """
    if not w:
        raise ValueError("word must be nonempty")
    alphabet.validate(w)
    k = alphabet.key(w)
    n = len(k)
    z = _z_array(k)
    killed = [0] * (n + 2)
    for j in range(1, n):
        d = j + z[j]
        hi = n if d < n and k[d] < k[z[j]] else d
        if hi >= j + 1:
            killed[j + 1] += 1
            killed[hi + 1] -= 1
    lengths = []
    active = 0
    for length in range(1, n + 1):
        active += killed[length]
        if active == 0:
            lengths.append(length)
    return lengths


def find_suffix_violation(
    w: str, alphabet: OrderedAlphabet = BINARY
) -> SuffixViolation | None:
    """Smallest position whose suffix is strictly smaller than the window.

    Positions whose suffix equals the window prefix over the whole
    overlap carry no information (they are period candidates, not
    violations): a prefix of an infinite Lyndon word may well have
    suffixes that are prefixes of it.
    """
    if not w:
        raise ValueError("word must be nonempty")
    alphabet.validate(w)
    k = alphabet.key(w)
    n = len(k)
    z = _z_array(k)
    for j in range(1, n):
        d = j + z[j]
        if d < n and k[d] < k[z[j]]:
            return SuffixViolation(
                position=j,
                offset=z[j],
                suffix_letter=w[d],
                prefix_letter=w[z[j]],
            )
    return None


def detect_period(w: str, max_period: int) -> PeriodWitness | None:
    """Smallest period p <= max_period holding across all of w, with |w| >= 2p.

    The double-attestation requirement keeps a single occurrence of a
    root from counting as a repetition.  The root of the smallest such
    period is automatically primitive.
    """
    if not w:
        raise ValueError("word must be nonempty")
    n = len(w)
    z = _z_array(w)
    for p in range(1, min(max_period, n // 2) + 1):
        if z[p] == n - p:
            return PeriodWitness(root=w[:p], exponent=n // p, remainder=n % p)
    return None


def confirmed_period(
    f: Morphism, w: str, max_period: int
) -> PeriodWitness | None:
    """A window period that provably extends to the whole fixed point.

    A fixed point of f equals root^omega exactly when the window repeats
    the root at least twice and f(root) is itself a power of root.
    Without the image check a window period can be a coincidence:
    infinite Lyndon fixed points have unboundedly many prefix squares,
    so arbitrarily long windows may attest a period that breaks just
    beyond them.
    """
    witness = detect_period(w, max_period)
    if witness is None:
        return None
    image = apply(f, witness.root)
    p = len(witness.root)
    if len(image) % p == 0 and image == witness.root * (len(image) // p):
        return witness
    return None


def _has_strict_violation(k: str) -> bool:
    # k[j:] < k includes the proper-prefix case, which is a period
    # candidate rather than a violation; startswith filters it out.
    return any(k[j:] < k and not k.startswith(k[j:]) for j in range(1, len(k)))


def pre_lyndon_oracle(
    w: str,
    alphabet: OrderedAlphabet = BINARY,
    bound: int | None = None,
) -> bool:
    """True iff some extension z with |z| <= bound makes wz a Lyndon word.

    Searches extensions depth-first (including the empty one), pruning
    any branch whose current word already has a suffix strictly smaller
    at a first difference: such a defect survives every further
    extension.  The default bound is |w| + 1.
    """
    if not w:
        raise ValueError("word must be nonempty")
    if len(w) > PRE_LYNDON_LENGTH_GUARD:
        raise ValueError(
            f"word longer than {PRE_LYNDON_LENGTH_GUARD}; extension search too costly"
        )
    alphabet.validate(w)
    if bound is None:
        bound = default_extension_bound(len(w))
    letters = [alphabet.key(c) for c in alphabet.letters]

    def search(k: str, remaining: int) -> bool:
        if _has_strict_violation(k):
            return False
        if all(k < k[i:] for i in range(1, len(k))):
            return True
        if remaining == 0:
            return False
        return any(search(k + c, remaining - 1) for c in letters)

    return search(alphabet.key(w), bound)


def window_report(
    w: str,
    config: OracleConfig | None = None,
    morphism: Morphism | None = None,
) -> OracleReport:
    """Analyze a window: Lyndon prefixes, first violation, period, conclusion.

    A violation refutes outright.  Otherwise a fully attested period
    means the window is consistent with a periodic word.  Otherwise
    enough Lyndon prefixes support the Lyndon hypothesis; too few leave
    the window inconclusive.

    When the generating morphism is supplied, only periods confirmed by
    it are reported (see :func:`confirmed_period`); raw window periods
    can be prefix-square coincidences.
    """
    cfg = config or OracleConfig()
    violation = find_suffix_violation(w)
    if morphism is None:
        period = detect_period(w, max_period=len(w) // 2)
    else:
        period = confirmed_period(morphism, w, max_period=len(w) // 2)
    lengths = tuple(lyndon_prefix_lengths(w))
    if violation is not None:
        conclusion = Conclusion.REFUTED
    elif period is not None:
        conclusion = Conclusion.PERIODIC
    elif len(lengths) >= cfg.min_lyndon_prefixes:
        conclusion = Conclusion.LOOKS_LYNDON
    else:
        conclusion = Conclusion.INCONCLUSIVE
    return OracleReport(
        window=len(w),
        lyndon_prefix_lengths=lengths,
        first_violation=violation,
        detected_period=period,
        conclusion=conclusion,
    )


def cross_validate(
    f: Morphism, config: OracleConfig | None = None
) -> tuple[OracleReport, bool | None]:
    """Window analysis of the fixed point versus the closed-form verdict.

    Agreement is True when the verdict and the window evidence point the
    same way, False when they conflict, and None when the window is
    inconclusive.
    """
    cfg = config or OracleConfig()
    longest_image = max(len(f.image_a), len(f.image_b))
    if cfg.window < 2 * longest_image:
        raise ValueError(
            f"window {cfg.window} shorter than twice the longest image ({longest_image})"
        )
    verdict = classify(f)
    w = fixed_point_prefix(f, cfg.window)
    report = window_report(w, cfg, morphism=f)
    if report.conclusion is Conclusion.INCONCLUSIVE:
        agreement: bool | None = None
    elif verdict.outcome is Outcome.INFINITE_LYNDON:
        agreement = report.conclusion is Conclusion.LOOKS_LYNDON
    else:
        agreement = report.conclusion in (Conclusion.REFUTED, Conclusion.PERIODIC)
    return report, agreement
