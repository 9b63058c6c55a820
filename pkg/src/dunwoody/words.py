"""
Free-group words, the index-shift automorphism and cyclic presentations.

A word of rank ``n`` is a tuple of nonzero integers; ``k`` stands for the
generator ``x_k`` and ``-k`` for its inverse.  Index arithmetic is done
modulo ``n`` with representatives ``1..n``, so the shift automorphism
``x_i -> x_{i+1}`` is a single arithmetic map on letters.
"""
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DomainError, MalformedWordError, ShapeError

__all__ = [
    "Word", "Presentation", "CyclicPresentation", "CyclicWitness",
    "reduce", "cyclic_reduce", "shift", "relabel", "relators",
    "cyclic_key", "detect_cyclic", "family", "fibonacci", "sieradsky",
    "fractional", "parse_word", "format_word",
]


def _fold(index: int, rank: int) -> int:
    return (index - 1) % rank + 1


@dataclass(frozen=True)
class Word:
    """An element of the free group ``F_rank`` given by its letters."""

    rank: int
    letters: tuple = ()

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise MalformedWordError(f"rank must be a positive integer, got {self.rank!r}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise MalformedWordError(
                    f"letter {x} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __mul__(self, other: "Word") -> "Word":
        if other.rank != self.rank:
            raise MalformedWordError("cannot multiply words of different rank")
        return reduce(Word(self.rank, self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(self.rank, tuple(-x for x in reversed(self.letters)))

    def is_reduced(self) -> bool:
        return all(a != -b for a, b in zip(self.letters, self.letters[1:]))

    def exponent_sums(self) -> list:
        """Exponent sum of each generator ``x_1 .. x_rank``."""
        sums = [0] * self.rank
        for x in self.letters:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return sums

    def __str__(self):
        return format_word(self)


@dataclass(frozen=True)
class Presentation:
    rank: int
    relators: tuple = ()

    def __post_init__(self):
        rels = tuple(self.relators)
        for r in rels:
            if not isinstance(r, Word):
                raise MalformedWordError(f"relator {r!r} is not a Word")
            if r.rank != self.rank:
                raise MalformedWordError(
                    f"relator of rank {r.rank} in a rank-{self.rank} presentation")
        object.__setattr__(self, "relators", rels)

    @property
    def is_balanced(self) -> bool:
        return len(self.relators) == self.rank

    def __str__(self):
        gens = ", ".join(f"x{i}" for i in range(1, self.rank + 1))
        rels = ", ".join(format_word(r, symbolic=True) or "1" for r in self.relators)
        return f"< {gens} | {rels} >"


@dataclass(frozen=True)
class CyclicPresentation:
    """The cyclic presentation ``G_n(w)``."""

    n: int
    w: Word

    def __post_init__(self):
        if self.w.rank != self.n:
            raise MalformedWordError(
                f"defining word has rank {self.w.rank}, expected {self.n}")

    def presentation(self) -> Presentation:
        return relators(self)

    def __str__(self):
        return f"G_{self.n}({format_word(self.w, symbolic=True) or '1'})"


@dataclass(frozen=True)
class CyclicWitness:
    """
    Evidence that a balanced presentation is cyclic.

    After relabeling the generators by ``x_i -> x_{i+offset}`` (and, if
    ``inverted``, replacing every generator by its inverse), relator
    ``index`` of the input is ``w`` and the relators agree with those of
    ``G_n(w)`` up to free and cyclic reduction, cyclic permutation and
    inversion.
    """

    cyclic: CyclicPresentation
    offset: int
    inverted: bool
    index: int

    @property
    def w(self) -> Word:
        return self.cyclic.w


def reduce(word: Word) -> Word:
    """Freely reduce ``word`` by cancelling adjacent inverse pairs."""
    stack = []
    for x in word.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return Word(word.rank, tuple(stack))


def cyclic_reduce(word: Word) -> Word:
    """
    Shortest word among the cyclic permutations of conjugates of ``word``.

    The result is reduced and its first and last letters are not mutually
    inverse.
    """
    letters = reduce(word).letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == -letters[j - 1]:
        i += 1
        j -= 1
    return Word(word.rank, letters[i:j])


def shift(word: Word, k: int) -> Word:
    """Apply the shift automorphism ``x_i -> x_{i+1}`` ``k`` times."""
    n = word.rank
    k %= n
    if k == 0:
        return word
    return Word(n, tuple(
        _fold(x + k, n) if x > 0 else -_fold(-x + k, n) for x in word.letters))


def relabel(word: Word, offset: int, inverted: bool = False) -> Word:
    """Shift generator indices by ``offset`` and optionally invert every generator."""
    w = shift(word, offset)
    if inverted:
        w = Word(w.rank, tuple(-x for x in w.letters))
    return w


def relators(cp: CyclicPresentation) -> Presentation:
    """Expand ``G_n(w)`` into the balanced presentation with relators ``shift(w, k)``."""
    return Presentation(cp.n, tuple(shift(cp.w, k) for k in range(cp.n)))


def cyclic_key(word: Word) -> tuple:
    """
    Canonical representative of the cyclic word of ``word`` up to inversion.

    Two relators read along the same closed curve, with any starting point
    and either orientation, get the same key.
    """
    letters = cyclic_reduce(word).letters
    if not letters:
        return ()
    inv = tuple(-x for x in reversed(letters))
    m = len(letters)
    return min(min(s[i:] + s[:i] for i in range(m)) for s in (letters, inv))


def _relator_multiset(words: Iterable[Word]) -> Counter:
    return Counter(cyclic_key(w) for w in words)


def detect_cyclic(p: Presentation,
                  target: Optional[CyclicPresentation] = None) -> Optional[CyclicWitness]:
    """
    Look for a cyclic structure on the balanced presentation ``p``.

    The search runs over the ``n`` cyclic relabelings ``x_i -> x_{i+t}``,
    global generator inversion, and the choice of relator used as the
    defining word.  When ``target`` is given, the relators must in
    addition agree with those of ``target``.  Returns ``None`` if no
    witness exists over that symmetry set.
    """
    if not p.is_balanced:
        raise ShapeError(
            f"presentation has {len(p.relators)} relators on {p.rank} generators")
    n = p.rank
    if target is not None:
        if target.n != n:
            return None
        wanted = _relator_multiset(relators(target).relators)
    for inverted in (False, True):
        for t in range(n):
            rels = [relabel(r, t, inverted) for r in p.relators]
            have = _relator_multiset(rels)
            if target is not None and have != wanted:
                continue
            for idx, r in enumerate(rels):
                w = reduce(r)
                if _relator_multiset(shift(w, k) for k in range(n)) == have:
                    return CyclicWitness(CyclicPresentation(n, w), t, inverted, idx)
    return None


def family(name: str, **params) -> CyclicPresentation:
    """Dispatch to one of the named families by ``name``."""
    builders = {"fibonacci": fibonacci, "sieradsky": sieradsky, "fractional": fractional}
    try:
        builder = builders[name]
    except KeyError:
        raise DomainError(f"unknown family {name!r}; expected one of {sorted(builders)}")
    return builder(**params)


def _word(rank: int, letters: Sequence[int]) -> Word:
    return Word(rank, tuple(_fold(x, rank) if x > 0 else -_fold(-x, rank) for x in letters))


def fibonacci(n: int) -> CyclicPresentation:
    """``F(2n) = G_{2n}(x1 x2 x3^-1)``, defined for ``n > 1``."""
    if n <= 1:
        raise DomainError(f"fibonacci needs n > 1, got {n}")
    return CyclicPresentation(2 * n, _word(2 * n, [1, 2, -3]))


def sieradsky(n: int) -> CyclicPresentation:
    """``S(n) = G_n(x1 x3 x2^-1)``, defined for ``n > 1``; indices fold mod ``n``."""
    if n <= 1:
        raise DomainError(f"sieradsky needs n > 1, got {n}")
    return CyclicPresentation(n, _word(n, [1, 3, -2]))


def fractional(l: int, k: int, n: int) -> CyclicPresentation:
    """
    Fractional Fibonacci group ``G_n((x1^-l x2^l)^k x2 (x3^-l x2^l)^k)``.

    The defining word is stored freely reduced.
    """
    if n <= 1 or l <= 0 or k <= 0:
        raise DomainError(f"fractional needs n > 1 and l, k > 0, got n={n}, l={l}, k={k}")
    head = ([-1] * l + [2] * l) * k
    tail = ([-3] * l + [2] * l) * k
    return CyclicPresentation(n, reduce(_word(n, head + [2] + tail)))


_SYMBOL = re.compile(r"^x(\d+)(?:\^\{?(-?\d+)\}?)?$")


def parse_word(text: str, rank: int) -> Word:
    """
    Parse ``"1 3 -2"`` or ``"x1 x3 x2^-1"`` into a Word of the given rank.

    Symbolic tokens accept any integer exponent, e.g. ``x2^3``.
    """
    letters = []
    for token in text.replace(",", " ").replace("*", " ").split():
        m = _SYMBOL.match(token)
        if m:
            gen = int(m.group(1))
            power = int(m.group(2)) if m.group(2) is not None else 1
            letters.extend([gen if power > 0 else -gen] * abs(power))
            continue
        try:
            letters.append(int(token))
        except ValueError:
            raise MalformedWordError(f"cannot parse token {token!r}")
    return Word(rank, tuple(letters))


def format_word(word: Word, symbolic: bool = False) -> str:
    if not symbolic:
        return " ".join(str(x) for x in word.letters)
    return " ".join(f"x{x}" if x > 0 else f"x{-x}^-1" for x in word.letters)
