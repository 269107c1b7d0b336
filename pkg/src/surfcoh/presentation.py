"""Surface group presentations and freely reduced words.

Two families of one-relator presentations are supported:

* orientable genus n >= 1:
  ``<a_1, b_1, ..., a_n, b_n | [a_1,b_1][a_2,b_2]...[a_n,b_n]>``
* non-orientable genus n >= 2:
  ``<a_1, ..., a_n | a_1^2 a_2^2 ... a_n^2>``

Words live in the free group on the generators and are kept freely
reduced at all times.  No reduction modulo the surface relation is ever
attempted; equality in the surface group is only ever tested after
evaluating words through a coefficient module action.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

ORIENTABLE = "orientable"
NONORIENTABLE = "nonorientable"

_TOKEN_RE = re.compile(r"^([ab])([1-9][0-9]*)(\^-1)?$")


class WordError(ValueError):
    """Malformed word text, or a token outside the presentation."""


class PresentationMismatch(ValueError):
    """Two values built over different presentations were combined."""


@dataclass(frozen=True, order=True)
class Generator:
    family: str  # "a" or "b"
    index: int

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


@dataclass(frozen=True, order=True)
class Letter:
    gen: Generator
    exp: int  # exactly +1 or -1

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.exp)

    def __str__(self) -> str:
        return str(self.gen) + ("^-1" if self.exp < 0 else "")


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for let in letters:
        if stack and stack[-1].gen == let.gen and stack[-1].exp == -let.exp:
            stack.pop()
        else:
            stack.append(let)
    return tuple(stack)


@dataclass(frozen=True)
class SurfacePresentation:
    kind: str
    genus: int

    def __post_init__(self) -> None:
        if self.kind not in (ORIENTABLE, NONORIENTABLE):
            raise ValueError(f"unknown presentation kind {self.kind!r}")
        minimum = 1 if self.kind == ORIENTABLE else 2
        if self.genus < minimum:
            raise ValueError(
                f"{self.kind} presentations need genus >= {minimum}, got {self.genus}"
            )

    @property
    def orientable(self) -> bool:
        return self.kind == ORIENTABLE

    def generators(self) -> tuple[Generator, ...]:
        gens = tuple(Generator("a", i) for i in range(1, self.genus + 1))
        if self.orientable:
            gens += tuple(Generator("b", i) for i in range(1, self.genus + 1))
        return gens

    def has_generator(self, gen: Generator) -> bool:
        if not 1 <= gen.index <= self.genus:
            return False
        return gen.family == "a" or (gen.family == "b" and self.orientable)

    def identity(self) -> "Word":
        return Word(self, ())

    def letter(self, family: str, index: int, exp: int = 1) -> "Word":
        gen = Generator(family, index)
        if exp not in (1, -1):
            raise WordError(f"letter exponent must be +-1, got {exp}")
        if not self.has_generator(gen):
            raise WordError(f"generator {gen} not in {self}")
        return Word(self, (Letter(gen, exp),))

    def word(self, text: str) -> "Word":
        return parse_word(text, self)

    def __str__(self) -> str:
        return f"{self.kind} genus {self.genus}"


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty word is the identity."""

    pres: SurfacePresentation
    letters: tuple[Letter, ...] = field(default=())

    def __post_init__(self) -> None:
        for prev, cur in zip(self.letters, self.letters[1:]):
            if prev.gen == cur.gen and prev.exp == -cur.exp:
                raise ValueError("Word constructed from unreduced letters")

    @staticmethod
    def from_letters(pres: SurfacePresentation, letters: Iterable[Letter]) -> "Word":
        return Word(pres, _free_reduce(letters))

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return word_product(self, other)

    def inverse(self) -> "Word":
        return Word(self.pres, tuple(l.inverse() for l in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.pres.identity()
        for _ in range(n):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(str(l) for l in self.letters)

    def sort_key(self) -> tuple:
        return (len(self.letters),) + tuple(
            (l.gen.family, l.gen.index, l.exp) for l in self.letters
        )


def parse_word(text: str, pres: SurfacePresentation) -> Word:
    """Parse whitespace-separated tokens ``a<k>``, ``b<k>``, ``a<k>^-1``...

    Tokens outside the presentation (bad family, index out of range,
    ``b`` tokens in the non-orientable case, or power suffixes other
    than ``^-1``) are rejected.  The result is freely reduced.
    """
    letters = []
    for pos, token in enumerate(text.split()):
        m = _TOKEN_RE.match(token)
        if m is None:
            raise WordError(f"bad token {token!r} at position {pos}")
        family, index, inv = m.group(1), int(m.group(2)), m.group(3)
        gen = Generator(family, index)
        if not pres.has_generator(gen):
            raise WordError(f"token {token!r} at position {pos} not in {pres}")
        letters.append(Letter(gen, -1 if inv else 1))
    return Word.from_letters(pres, letters)


def word_product(u: Word, v: Word) -> Word:
    if u.pres != v.pres:
        raise PresentationMismatch(f"{u.pres} vs {v.pres}")
    return Word.from_letters(u.pres, u.letters + v.letters)


def commutator(u: Word, v: Word) -> Word:
    return u * v * u.inverse() * v.inverse()


def relator(pres: SurfacePresentation) -> Word:
    """The defining relation: product of commutators, or of squares."""
    out = pres.identity()
    if pres.orientable:
        for i in range(1, pres.genus + 1):
            out = out * commutator(pres.letter("a", i), pres.letter("b", i))
    else:
        for i in range(1, pres.genus + 1):
            ai = pres.letter("a", i)
            out = out * ai * ai
    return out


def relator_block(pres: SurfacePresentation, upto: int) -> Word:
    """Prefix of the relator through the ``upto``-th commutator/square."""
    out = pres.identity()
    if pres.orientable:
        for i in range(1, upto + 1):
            out = out * commutator(pres.letter("a", i), pres.letter("b", i))
    else:
        for i in range(1, upto + 1):
            ai = pres.letter("a", i)
            out = out * ai * ai
    return out


def random_reduced_word(pres: SurfacePresentation, rng, max_len: int = 32) -> Word:
    """Uniform-ish random freely reduced word of length <= max_len."""
    gens = pres.generators()
    length = rng.randint(0, max_len)
    letters: list[Letter] = []
    while len(letters) < length:
        let = Letter(rng.choice(gens), rng.choice((1, -1)))
        if letters and letters[-1].gen == let.gen and letters[-1].exp == -let.exp:
            continue
        letters.append(let)
    return Word(pres, tuple(letters))
