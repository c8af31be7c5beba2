"""Binary endomorphisms over {a < b} and their infinite fixed points.

A morphism is given by the images of the two letters (either may be
empty).  When f(a) starts with a and the iterates f^n(a) grow without
bound, the morphism is prolongable on a and generates a unique infinite
fixed point; :class:`PrefixStream` materializes prefixes of it lazily.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator

from .words import BINARY, LESS, lex_compare, is_lyndon

__all__ = [
    "Morphism",
    "MorphismParseError",
    "NotProlongableError",
    "ProlongabilityReport",
    "PrefixStream",
    "ShapeTag",
    "PrefixShape",
    "apply",
    "iterate",
    "preserves_order",
    "is_lyndon_morphism",
    "prolongability",
    "fixed_point_prefix",
    "prefix_shape",
    "parse_morphism",
    "iter_morphisms",
]


class NotProlongableError(ValueError):
    """The operation needs a fixed point but f is not prolongable on a."""


class MorphismParseError(ValueError):
    """Malformed morphism text; ``offset`` points at the offending character."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Morphism:
    """Endomorphism of {a, b}* determined by the letter images."""

    image_a: str
    image_b: str

    def __post_init__(self) -> None:
        BINARY.validate(self.image_a)
        BINARY.validate(self.image_b)
        object.__setattr__(
            self, "_table", str.maketrans({"a": self.image_a, "b": self.image_b})
        )

    def image(self, letter: str) -> str:
        if letter == "a":
            return self.image_a
        if letter == "b":
            return self.image_b
        raise ValueError(f"letter {letter!r} not in alphabet 'ab'")

    def spec(self) -> str:
        return f"a={self.image_a};b={self.image_b}"


def apply(f: Morphism, w: str) -> str:
    """Image of w under f: letter images concatenated in order."""
    BINARY.validate(w)
    return w.translate(f._table)


def iterate(f: Morphism, w: str, n: int) -> str:
    """n-fold application of f to w (n = 0 returns w unchanged)."""
    if n < 0:
        raise ValueError("iteration count must be nonnegative")
    BINARY.validate(w)
    for _ in range(n):
        w = apply(f, w)
    return w


def preserves_order(f: Morphism) -> bool:
    """True iff u < v always implies f(u) < f(v).

    Over the binary alphabet this reduces to the single comparison
    f(ab) < f(b).
    """
    return lex_compare(apply(f, "ab"), f.image_b) == LESS


def is_lyndon_morphism(f: Morphism) -> bool:
    """True iff f preserves the order and both letter images are Lyndon."""
    return (
        preserves_order(f)
        and is_lyndon(f.image_a)
        and is_lyndon(f.image_b)
    )


@dataclass(frozen=True)
class ProlongabilityReport:
    starts_with_a: bool
    growth_unbounded: bool
    mortal_letters: frozenset[str]
    prolongable: bool


def prolongability(f: Morphism) -> ProlongabilityReport:
    """Exact prolongability-on-a analysis, erasing images included.

    A letter is mortal when repeated application eventually erases it;
    over two letters the fixpoint closes in at most two rounds.  Growth
    of |f^n(a)| is unbounded iff a is not mortal and some letter
    reachable from a (after deleting mortal letters from the images)
    maps to two or more surviving letters.
    """
    mortal = {x for x in "ab" if not f.image(x)}
    for _ in range(2):
        mortal |= {x for x in "ab" if all(c in mortal for c in f.image(x))}

    starts = f.image_a.startswith("a")
    if "a" in mortal:
        unbounded = False
    else:
        pruned = {
            x: "".join(c for c in f.image(x) if c not in mortal)
            for x in "ab"
            if x not in mortal
        }
        reachable = {"a"}
        while True:
            grown = reachable | {c for x in reachable for c in pruned[x]}
            if grown == reachable:
                break
            reachable = grown
        unbounded = any(len(pruned[x]) >= 2 for x in reachable)

    return ProlongabilityReport(
        starts_with_a=starts,
        growth_unbounded=unbounded,
        mortal_letters=frozenset(mortal),
        prolongable=starts and unbounded,
    )


class PrefixStream:
    """Lazily generated prefix of the infinite fixed point of f.

    The buffer is always a prefix of the fixed point; it grows by
    expanding one already-generated letter at a time, so memory stays
    linear in the longest prefix requested.  A stream holds private
    mutable state: use one stream per consumer.
    """

    def __init__(self, f: Morphism) -> None:
        if not prolongability(f).prolongable:
            raise NotProlongableError(f"{f.spec()} is not prolongable on a")
        self.morphism = f
        self._buf: list[str] = list(f.image_a)
        self._next = 1

    def prefix(self, n: int) -> str:
        buf = self._buf
        images = {"a": self.morphism.image_a, "b": self.morphism.image_b}
        while len(buf) < n:
            # prolongable => the fixed point is infinite, so expansion
            # can never catch up with the write position
            assert self._next < len(buf), "prefix stream starved"
            buf.extend(images[buf[self._next]])
            self._next += 1
        return "".join(buf[:n])


def fixed_point_prefix(f: Morphism, n: int) -> str:
    """The first n letters of the infinite fixed point of f."""
    if n < 1:
        raise ValueError("prefix length must be positive")
    return PrefixStream(f).prefix(n)


class ShapeTag(Enum):
    PURE_POWER_OF_A = "pure_power_of_a"
    CASE_AA = "case_aa"
    AB_OMEGA = "ab_omega"
    CASE_AB = "case_ab"


@dataclass(frozen=True)
class PrefixShape:
    """How the fixed point starts.

    PURE_POWER_OF_A: f(a) is a power of a; the fixed point is a^omega.
    CASE_AA(i):      the fixed point starts a^i b with i >= 2.
    AB_OMEGA:        the fixed point is a b^omega.
    CASE_AB(i):      the fixed point starts a b^i a with i >= 1.
    """

    tag: ShapeTag
    i: int | None = None


def prefix_shape(f: Morphism) -> PrefixShape:
    """Classify the fixed point's prefix into one of the four shapes.

    The leading a-run can be read off f(a) directly because f(a) is a
    prefix of the fixed point.  The a b^omega shape is decided from the
    image forms (f(a) in ab+, f(b) in b+): no finite scan could confirm
    the absence of a second a.  In the remaining case the second a is
    guaranteed to occur within f^2(a).
    """
    if not prolongability(f).prolongable:
        raise NotProlongableError(f"{f.spec()} is not prolongable on a")
    ia, ib = f.image_a, f.image_b
    if "b" not in ia:
        return PrefixShape(ShapeTag.PURE_POWER_OF_A)
    run = ia.index("b")
    if run >= 2:
        return PrefixShape(ShapeTag.CASE_AA, run)
    if "a" not in ia[1:] and ib and "a" not in ib:
        return PrefixShape(ShapeTag.AB_OMEGA)
    bound = len(apply(f, ia))
    w = PrefixStream(f).prefix(bound)
    second = w.find("a", 1)
    assert second != -1, "second a must occur within f^2(a)"
    return PrefixShape(ShapeTag.CASE_AB, second - 1)


def parse_morphism(text: str) -> Morphism:
    """Parse the ``a=WORD;b=WORD`` format (words over {a,b}, possibly empty).

    Whitespace around tokens is ignored.  Raises MorphismParseError with
    the offset of the offending character.
    """
    pos = 0
    n = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect(ch: str) -> None:
        nonlocal pos
        skip_ws()
        if pos >= n or text[pos] != ch:
            raise MorphismParseError(f"expected {ch!r}", pos)
        pos += 1

    def word() -> str:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < n and text[pos] in "ab":
            pos += 1
        return text[start:pos]

    expect("a")
    expect("=")
    image_a = word()
    expect(";")
    expect("b")
    expect("=")
    image_b = word()
    skip_ws()
    if pos != n:
        raise MorphismParseError(f"unexpected character {text[pos]!r}", pos)
    return Morphism(image_a, image_b)


def iter_morphisms(max_len: int) -> Iterator[Morphism]:
    """All morphisms with f(a) starting with a, 1 <= |f(a)| <= max_len,
    and 0 <= |f(b)| <= max_len, in lexicographic (f(a), f(b)) order."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    images_a = sorted(
        "a" + "".join(t) for k in range(max_len) for t in product("ab", repeat=k)
    )
    images_b = sorted(
        "".join(t) for k in range(max_len + 1) for t in product("ab", repeat=k)
    )
    for ia in images_a:
        for ib in images_b:
            yield Morphism(ia, ib)
