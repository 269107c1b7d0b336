"""Length-two free resolution of Z over the surface group ring.

The resolution has one degree-0 generator x, degree-1 generators y_i
(and z_i in the orientable case), and one degree-2 generator w:

    0 -> P2 --d2--> P1 --d1--> P0 --aug--> Z -> 0

with d1(y_i) = (a_i - 1) x, d1(z_i) = (b_i - 1) x, and d2(w) built from
the Fox derivatives of the relator.  The contracting homotopy is
s_{-1}(1) = x and s_0(g x) = sum_j (dg/da_j) y_j + (dg/db_j) z_j on a
chosen freely reduced representative g.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .groupring import GroupRingElement, augmentation, fox_derivative
from .presentation import (
    Generator,
    PresentationMismatch,
    SurfacePresentation,
    Word,
    relator,
)


@dataclass(frozen=True, order=True)
class BasisLabel:
    degree: int
    name: str  # "x", "y", "z" or "w"
    index: int = 0  # 0 for x and w

    def __str__(self) -> str:
        return self.name if self.index == 0 else f"{self.name}{self.index}"


X = BasisLabel(0, "x")
W = BasisLabel(2, "w")


def y(i: int) -> BasisLabel:
    return BasisLabel(1, "y", i)


def z(i: int) -> BasisLabel:
    return BasisLabel(1, "z", i)


class ChainElement:
    """Element of P0, P1 or P2: group-ring coordinates per basis label."""

    __slots__ = ("pres", "degree", "coords")

    def __init__(
        self,
        pres: SurfacePresentation,
        degree: int,
        coords: Mapping[BasisLabel, GroupRingElement] | None = None,
    ):
        self.pres = pres
        self.degree = degree
        self.coords: dict[BasisLabel, GroupRingElement] = {}
        if coords:
            for label, gre in coords.items():
                if label.degree != degree:
                    raise ValueError(f"label {label} has degree {label.degree}, not {degree}")
                if not gre.is_zero:
                    self.coords[label] = gre

    def coefficient(self, label: BasisLabel) -> GroupRingElement:
        return self.coords.get(label, GroupRingElement.zero(self.pres))

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "ChainElement") -> "ChainElement":
        if self.pres != other.pres or self.degree != other.degree:
            raise PresentationMismatch("chain elements are not comparable")
        coords = dict(self.coords)
        for label, gre in other.coords.items():
            coords[label] = coords.get(label, GroupRingElement.zero(self.pres)) + gre
        return ChainElement(self.pres, self.degree, coords)

    def __neg__(self) -> "ChainElement":
        return ChainElement(self.pres, self.degree, {l: -g for l, g in self.coords.items()})

    def __sub__(self, other: "ChainElement") -> "ChainElement":
        return self + (-other)

    def act(self, r: GroupRingElement | Word | int) -> "ChainElement":
        """Left module action of a ring element (or word, or integer)."""
        if isinstance(r, int):
            r = GroupRingElement.one(self.pres) * r
        elif isinstance(r, Word):
            r = GroupRingElement.from_word(r)
        return ChainElement(self.pres, self.degree, {l: r * g for l, g in self.coords.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ChainElement)
            and self.pres == other.pres
            and self.degree == other.degree
            and self.coords == other.coords
        )

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = [f"({gre})*{label}" for label, gre in sorted(self.coords.items())]
        return " + ".join(parts)

    __repr__ = __str__


class Resolution:
    """The resolution data for one presentation, with d1, d2 and s0."""

    def __init__(self, pres: SurfacePresentation):
        self.pres = pres
        self.relator = relator(pres)
        n = pres.genus
        self.degree1_labels: tuple[BasisLabel, ...] = tuple(y(i) for i in range(1, n + 1))
        if pres.orientable:
            self.degree1_labels += tuple(z(i) for i in range(1, n + 1))
        # d2(w) coordinates: the Fox derivatives of the relator.
        self._d2: dict[BasisLabel, GroupRingElement] = {}
        for label in self.degree1_labels:
            gen = Generator("a" if label.name == "y" else "b", label.index)
            self._d2[label] = fox_derivative(self.relator, gen)

    def basis(self, degree: int) -> tuple[BasisLabel, ...]:
        if degree == 0:
            return (X,)
        if degree == 1:
            return self.degree1_labels
        if degree == 2:
            return (W,)
        raise ValueError(f"resolution has no degree {degree}")

    def d1_coefficient(self, label: BasisLabel) -> GroupRingElement:
        """The (g - 1) coefficient with d1(label) = (g - 1) x."""
        if label.degree != 1:
            raise ValueError(f"{label} is not a degree-1 label")
        gen = self.pres.letter("a" if label.name == "y" else "b", label.index)
        return GroupRingElement.from_word(gen) - GroupRingElement.one(self.pres)

    def d1_word(self, label: BasisLabel) -> Word:
        return self.pres.letter("a" if label.name == "y" else "b", label.index)

    def d2_coefficient(self, label: BasisLabel) -> GroupRingElement:
        return self._d2[label]

    def d2_chain(self) -> ChainElement:
        return ChainElement(self.pres, 1, dict(self._d2))

    def boundary(self, c: ChainElement) -> ChainElement:
        """ZG-linear extension of d1/d2; drops degree by one."""
        if c.degree == 1:
            total = GroupRingElement.zero(self.pres)
            for label, gre in c.coords.items():
                total = total + gre * self.d1_coefficient(label)
            return ChainElement(self.pres, 0, {X: total})
        if c.degree == 2:
            coords: dict[BasisLabel, GroupRingElement] = {}
            for label, gre in c.coords.items():
                if label != W:
                    raise ValueError(f"unexpected degree-2 label {label}")
                for target, coeff in self._d2.items():
                    coords[target] = coords.get(target, GroupRingElement.zero(self.pres)) + gre * coeff
            return ChainElement(self.pres, 1, coords)
        raise ValueError(f"no boundary out of degree {c.degree}")

    def s_minus1(self) -> ChainElement:
        """Section of the augmentation: 1 maps to x."""
        return ChainElement(self.pres, 0, {X: GroupRingElement.one(self.pres)})

    def s0(self, g: Word) -> ChainElement:
        """Contracting homotopy in degree 0 on the representative ``g``.

        Satisfies d1(s0(g x)) = (g - 1) x exactly in the free group
        ring, by the fundamental identity of the Fox calculus.
        """
        if g.pres != self.pres:
            raise PresentationMismatch(f"{g.pres} vs {self.pres}")
        coords: dict[BasisLabel, GroupRingElement] = {}
        for label in self.degree1_labels:
            gen = Generator("a" if label.name == "y" else "b", label.index)
            coords[label] = fox_derivative(g, gen)
        return ChainElement(self.pres, 1, coords)


def build_resolution(pres: SurfacePresentation) -> Resolution:
    return Resolution(pres)


def apply_boundary(res: Resolution, c: ChainElement) -> ChainElement:
    return res.boundary(c)


def contracting_s0(res: Resolution, g: Word) -> ChainElement:
    return res.s0(g)


def augmentation_of_chain(c: ChainElement) -> int:
    """Augmentation of a degree-0 chain (coefficient sum at x)."""
    if c.degree != 0:
        raise ValueError("augmentation only applies in degree 0")
    return augmentation(c.coefficient(X))
