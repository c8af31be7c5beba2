"""Finite-word primitives over ordered alphabets.

Words are plain Python strings.  Operations that depend on the letter
order take an :class:`OrderedAlphabet`; the position of a letter in the
alphabet string is its rank.  The default alphabet is the binary
``a < b``.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "LESS",
    "EQUAL",
    "GREATER",
    "OrderedAlphabet",
    "BINARY",
    "FactorizationResult",
    "PreLyndonWitness",
    "PeriodWitness",
    "lex_compare",
    "is_lyndon",
    "cfl_factorize",
    "primitive_root",
    "is_power_of_lyndon",
    "is_pre_lyndon",
]

LESS = -1
EQUAL = 0
GREATER = 1


@dataclass(frozen=True)
class OrderedAlphabet:
    """A totally ordered alphabet of single-character letters.

    ``letters[0]`` is the smallest letter, ``letters[-1]`` the largest.
    """

    letters: str

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("alphabet needs at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("alphabet letters must be distinct")
        # Translating words into sorted letter order makes native string
        # comparison agree with the declared order.
        object.__setattr__(self, "_letter_set", frozenset(self.letters))
        natural = "".join(sorted(self.letters))
        table = None if natural == self.letters else str.maketrans(self.letters, natural)
        object.__setattr__(self, "_table", table)

    @property
    def max_letter(self) -> str:
        return self.letters[-1]

    def validate(self, word: str) -> None:
        if not self._letter_set.issuperset(word):
            bad = next(ch for ch in word if ch not in self._letter_set)
            raise ValueError(f"letter {bad!r} not in alphabet {self.letters!r}")

    def key(self, word: str) -> str:
        """Comparison key: native order on keys is the declared order."""
        return word if self._table is None else word.translate(self._table)


BINARY = OrderedAlphabet("ab")


@dataclass(frozen=True)
class FactorizationResult:
    """Nonincreasing factorization of a word into Lyndon factors."""

    factors: tuple[str, ...]

    @property
    def word(self) -> str:
        return "".join(self.factors)


@dataclass(frozen=True)
class PreLyndonWitness:
    """Decomposition ``(uv)^k u`` of a prefix of a Lyndon word.

    ``uv`` is a Lyndon word, ``v`` is nonempty and ``k >= 1``.  The
    witness returned by :func:`is_pre_lyndon` has the shortest possible
    period ``|uv|`` (equivalently the largest ``k``).
    """

    u: str
    v: str
    k: int

    @property
    def word(self) -> str:
        return (self.u + self.v) * self.k + self.u

    @property
    def period(self) -> int:
        return len(self.u) + len(self.v)


@dataclass(frozen=True)
class PeriodWitness:
    """A primitive root repeated through a word (last copy may be cut)."""

    root: str
    exponent: int
    remainder: int

    @property
    def length(self) -> int:
        return len(self.root) * self.exponent + self.remainder


def _require_nonempty(w: str) -> None:
    if not w:
        raise ValueError("word must be nonempty")


def lex_compare(u: str, v: str, alphabet: OrderedAlphabet = BINARY) -> int:
    """Lexicographic comparison, returning LESS, EQUAL or GREATER.

    A proper prefix is smaller than the longer word; otherwise the first
    differing letter decides.
    """
    alphabet.validate(u)
    alphabet.validate(v)
    ku, kv = alphabet.key(u), alphabet.key(v)
    if ku == kv:
        return EQUAL
    return LESS if ku < kv else GREATER


def is_lyndon(w: str, alphabet: OrderedAlphabet = BINARY) -> bool:
    """True iff w is strictly smaller than all its nonempty proper suffixes."""
    _require_nonempty(w)
    alphabet.validate(w)
    k = alphabet.key(w)
    return all(k < k[i:] for i in range(1, len(k)))


def cfl_factorize(w: str, alphabet: OrderedAlphabet = BINARY) -> FactorizationResult:
    """The unique nonincreasing factorization into Lyndon words (Duval scan)."""
    _require_nonempty(w)
    alphabet.validate(w)
    k = alphabet.key(w)
    n = len(k)
    factors = []
    start = 0
    while start < n:
        i, j = start, start + 1
        while j < n and k[i] <= k[j]:
            i = start if k[i] < k[j] else i + 1
            j += 1
        period = j - i
        while start <= i:
            factors.append(w[start:start + period])
            start += period
    return FactorizationResult(tuple(factors))


def primitive_root(w: str) -> tuple[str, int]:
    """Shortest word r and maximal e with w = r^e; r is primitive."""
    _require_nonempty(w)
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p], n // p
    raise AssertionError("unreachable: every word is a power of itself")


def is_power_of_lyndon(
    w: str, alphabet: OrderedAlphabet = BINARY
) -> tuple[str, int] | None:
    """The pair (u, k) with w = u^k and u Lyndon, or None.

    Lyndon words are primitive, so the primitive root is the only
    candidate for u.
    """
    _require_nonempty(w)
    alphabet.validate(w)
    root, k = primitive_root(w)
    return (root, k) if is_lyndon(root, alphabet) else None


def is_pre_lyndon(
    w: str, alphabet: OrderedAlphabet = BINARY
) -> PreLyndonWitness | None:
    """Witness that w is a prefix of some Lyndon word over the alphabet.

    Such words are exactly those of the form ``(uv)^k u`` with ``uv``
    Lyndon and ``v`` nonempty, minus the powers ``c^k`` (k >= 2) of the
    alphabet's largest letter c, which have the form but extend to no
    Lyndon word.  The exclusion is relative to the declared alphabet,
    not to the letters that happen to occur in w.

    Runs a single left-to-right scan; the scan state yields the shortest
    period decomposition directly.
    """
    _require_nonempty(w)
    alphabet.validate(w)
    n = len(w)
    if n >= 2 and w == alphabet.max_letter * n:
        return None
    k = alphabet.key(w)
    i, j = 0, 1
    while j < n:
        if k[j] == k[i]:
            i += 1
        elif k[j] > k[i]:
            i = 0
        else:
            return None
        j += 1
    p = n - i
    r = n % p
    return PreLyndonWitness(u=w[:r], v=w[r:p], k=n // p)
