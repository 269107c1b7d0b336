"""Integral group ring of the free group on the surface generators.

Elements are finite Z-linear combinations of freely reduced words.  The
module also implements the Fox differential calculus: the derivations
d/dx_i on the free group ring characterised by

    d(x_j)/dx_i      = delta_ij
    d(x_j^-1)/dx_i   = -delta_ij * x_j^-1
    d(uv)/dx_i       = du/dx_i + u * dv/dx_i

whose evaluations on the relator provide the degree-two boundary map of
the resolution and the contracting homotopy in degree zero.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .presentation import (
    Generator,
    PresentationMismatch,
    SurfacePresentation,
    Word,
)


class GroupRingElement:
    """Finite formal sum ``sum c_w * w`` with integer coefficients.

    Zero coefficients are never stored; the zero element has an empty
    term map and the identity is ``{empty word: 1}``.
    """

    __slots__ = ("pres", "terms")

    def __init__(self, pres: SurfacePresentation, terms: Mapping[Word, int] | None = None):
        self.pres = pres
        self.terms: dict[Word, int] = {}
        if terms:
            for word, coeff in terms.items():
                if coeff:
                    self.terms[word] = self.terms.get(word, 0) + coeff
            self.terms = {w: c for w, c in self.terms.items() if c}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(pres: SurfacePresentation) -> "GroupRingElement":
        return GroupRingElement(pres)

    @staticmethod
    def one(pres: SurfacePresentation) -> "GroupRingElement":
        return GroupRingElement(pres, {pres.identity(): 1})

    @staticmethod
    def from_word(word: Word, coeff: int = 1) -> "GroupRingElement":
        return GroupRingElement(word.pres, {word: coeff})

    # -- ring structure -----------------------------------------------

    def _check(self, other: "GroupRingElement") -> None:
        if self.pres != other.pres:
            raise PresentationMismatch(f"{self.pres} vs {other.pres}")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, 0) + coeff
        return GroupRingElement(self.pres, terms)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: Union["GroupRingElement", Word, int]) -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement(self.pres, {w: c * other for w, c in self.terms.items()})
        if isinstance(other, Word):
            other = GroupRingElement.from_word(other)
        self._check(other)
        terms: dict[Word, int] = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u * v
                terms[w] = terms.get(w, 0) + cu * cv
        return GroupRingElement(self.pres, terms)

    def __rmul__(self, other: Union[Word, int]) -> "GroupRingElement":
        if isinstance(other, int):
            return self * other
        if isinstance(other, Word):
            return GroupRingElement.from_word(other) * self
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupRingElement)
            and self.pres == other.pres
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.pres, frozenset(self.terms.items())))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterable[tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for word, coeff in self.items():
            body = str(word)
            if coeff == 1:
                term = body
            elif coeff == -1:
                term = f"-{body}"
            else:
                term = f"{coeff}*{body}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    __repr__ = __str__


def augmentation(r: GroupRingElement) -> int:
    """Ring map to Z sending every word to 1: the coefficient sum."""
    return sum(r.terms.values())


def fox_derivative(
    w: Union[Word, GroupRingElement], gen: Generator
) -> GroupRingElement:
    """Fox derivative with respect to ``gen``.

    Computed by a single left-to-right scan keeping the running prefix:
    a letter ``g`` contributes ``+prefix`` and a letter ``g^-1``
    contributes ``-prefix*g^-1``.  Extends to ring elements linearly.
    """
    if isinstance(w, GroupRingElement):
        out = GroupRingElement.zero(w.pres)
        for word, coeff in w.terms.items():
            out = out + fox_derivative(word, gen) * coeff
        return out

    pres = w.pres
    terms: dict[Word, int] = {}
    prefix = pres.identity()
    for letter in w.letters:
        if letter.gen == gen and letter.exp > 0:
            terms[prefix] = terms.get(prefix, 0) + 1
        prefix = prefix * Word(pres, (letter,))
        if letter.gen == gen and letter.exp < 0:
            terms[prefix] = terms.get(prefix, 0) - 1
    return GroupRingElement(pres, terms)
