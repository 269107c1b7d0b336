"""Local coefficient systems: Z^k with a unimodular integer action.

A coefficient module assigns to every generator of the surface group a
matrix in GL_k(Z); the assignment must kill the relator, so that it
defines an action of the group itself.  Words and group-ring elements
then evaluate to exact integer matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from .groupring import GroupRingElement
from .intlinalg import IntMatrix, bareiss_det, int_inverse, kronecker
from .presentation import (
    Generator,
    PresentationMismatch,
    SurfacePresentation,
    Word,
    relator,
)


class DeterminantNotUnit(ValueError):
    """An action matrix is not invertible over the integers."""


class RelatorNotRespected(ValueError):
    """The assignment does not kill the relator."""

    def __init__(self, evaluated: IntMatrix):
        super().__init__(f"relator evaluates to {evaluated}, not the identity")
        self.evaluated = evaluated


@dataclass(frozen=True)
class CoefficientModule:
    pres: SurfacePresentation
    rank: int
    action: tuple[tuple[Generator, IntMatrix], ...]  # sorted by generator
    name: str | None = field(default=None, compare=False)

    def matrix(self, gen: Generator) -> IntMatrix:
        for g, m in self.action:
            if g == gen:
                return m
        raise KeyError(f"no action matrix for {gen}")

    def action_map(self) -> dict[Generator, IntMatrix]:
        return dict(self.action)

    def display_name(self) -> str:
        return self.name if self.name else f"rank-{self.rank} module"

    def __str__(self) -> str:
        return self.display_name()


def make_module(
    rank: int,
    action: Mapping[Generator, IntMatrix | Sequence[Sequence[int]]],
    pres: SurfacePresentation,
    name: str | None = None,
) -> CoefficientModule:
    """Validate and build a coefficient module.

    Every generator of the presentation must act by a k x k integer
    matrix of determinant +-1, and the evaluated relator must be the
    identity; otherwise the action would not factor through the group.
    """
    table: dict[Generator, IntMatrix] = {}
    for gen in pres.generators():
        raw = action.get(gen)
        if raw is None:
            mat = IntMatrix.identity(rank)
        elif isinstance(raw, IntMatrix):
            mat = raw
        else:
            mat = IntMatrix.from_rows(raw)
        if mat.shape != (rank, rank):
            raise ValueError(f"action of {gen} has shape {mat.shape}, expected {(rank, rank)}")
        if abs(bareiss_det(mat)) != 1:
            raise DeterminantNotUnit(f"action of {gen} has determinant {bareiss_det(mat)}")
        table[gen] = mat
    for gen in action:
        if gen not in table:
            raise ValueError(f"action names {gen}, which is not a generator of {pres}")
    module = CoefficientModule(
        pres=pres,
        rank=rank,
        action=tuple(sorted(table.items())),
        name=name,
    )
    rel = _evaluate_word(module, relator(pres))
    if rel != IntMatrix.identity(rank):
        raise RelatorNotRespected(rel)
    return module


@lru_cache(maxsize=None)
def _inverse_matrix(module: CoefficientModule, gen: Generator) -> IntMatrix:
    return int_inverse(module.matrix(gen))


@lru_cache(maxsize=200_000)
def _evaluate_word(module: CoefficientModule, w: Word) -> IntMatrix:
    out = IntMatrix.identity(module.rank)
    for letter in w.letters:
        m = module.matrix(letter.gen) if letter.exp > 0 else _inverse_matrix(module, letter.gen)
        out = out @ m
    return out


def evaluate(module: CoefficientModule, r: GroupRingElement | Word) -> IntMatrix:
    """Ring homomorphism into k x k matrices."""
    if isinstance(r, Word):
        if r.pres != module.pres:
            raise PresentationMismatch(f"{r.pres} vs {module.pres}")
        return _evaluate_word(module, r)
    if r.pres != module.pres:
        raise PresentationMismatch(f"{r.pres} vs {module.pres}")
    out = IntMatrix.zeros(module.rank, module.rank)
    for word, coeff in r.terms.items():
        out = out + _evaluate_word(module, word).scale(coeff)
    return out


def tensor(m1: CoefficientModule, m2: CoefficientModule) -> CoefficientModule:
    """Tensor product over Z: Kronecker product of the two actions."""
    if m1.pres != m2.pres:
        raise PresentationMismatch(f"{m1.pres} vs {m2.pres}")
    action = {
        gen: kronecker(m1.matrix(gen), m2.matrix(gen)) for gen in m1.pres.generators()
    }
    name = None
    if m1.name and m2.name:
        name = f"{m1.name}(x){m2.name}"
    return make_module(m1.rank * m2.rank, action, m1.pres, name=name)


def trivial_module(pres: SurfacePresentation, rank: int = 1, name: str | None = None) -> CoefficientModule:
    return make_module(rank, {}, pres, name=name or ("Z" if rank == 1 else f"Z^{rank}"))


def sign_module(
    pres: SurfacePresentation, negatives: Sequence[Generator], name: str | None = None
) -> CoefficientModule:
    """Rank-1 module where the listed generators act by -1."""
    action = {gen: IntMatrix.from_rows([[-1]]) for gen in negatives}
    return make_module(1, action, pres, name=name)


def builtin_modules(pres: SurfacePresentation) -> list[CoefficientModule]:
    """The named rank-1 systems used in the reference computations.

    Orientable: the trivial module Z and the twist Z~ with b_n acting
    by -1.  Non-orientable: the trivial Z_theta0, Z_theta1 twisting
    a_1, and Z_theta2 twisting a_1 and a_2.
    """
    n = pres.genus
    if pres.orientable:
        return [
            trivial_module(pres, 1, name="Z"),
            sign_module(pres, [Generator("b", n)], name="Z~"),
        ]
    return [
        trivial_module(pres, 1, name="Z_theta0"),
        sign_module(pres, [Generator("a", 1)], name="Z_theta1"),
        sign_module(pres, [Generator("a", 1), Generator("a", 2)], name="Z_theta2"),
    ]


def builtin_module(pres: SurfacePresentation, name: str) -> CoefficientModule:
    for module in builtin_modules(pres):
        if module.name == name:
            return module
    raise KeyError(f"no built-in module named {name!r} for {pres}")


def random_module(pres: SurfacePresentation, rng, max_rank: int = 3) -> CoefficientModule:
    """A random valid module: always unimodular, always kills the relator.

    Orientable case: each (a_i, b_i) pair acts by commuting matrices
    (a power pair), so every commutator dies.  Non-orientable case:
    either involutions (squares are trivial) or a +-1 character.
    """
    rank = rng.randint(1, max_rank)
    n = pres.genus
    action: dict[Generator, IntMatrix] = {}
    if pres.orientable:
        for i in range(1, n + 1):
            base = random_power_basis(rank, rng)
            action[Generator("a", i)] = _power(base, rng.randint(-2, 2))
            action[Generator("b", i)] = _power(base, rng.randint(-2, 2))
    else:
        style = rng.randrange(2)
        if style == 0:
            # Conjugated sign involutions: every square is the identity.
            for i in range(1, n + 1):
                t = random_power_basis(rank, rng)
                signs = [rng.choice((1, -1)) for _ in range(rank)]
                d = IntMatrix.from_rows(
                    [[signs[r] if r == c else 0 for c in range(rank)] for r in range(rank)]
                )
                action[Generator("a", i)] = t @ d @ int_inverse(t)
        else:
            base = random_power_basis(rank, rng)
            exps = [rng.randint(-2, 2) for _ in range(n)]
            exps[-1] = -sum(exps[:-1])  # total exponent zero kills the relator
            for i in range(1, n + 1):
                action[Generator("a", i)] = _power(base, exps[i - 1])
    return make_module(rank, action, pres)


def random_power_basis(rank: int, rng) -> IntMatrix:
    from .intlinalg import random_unimodular

    return random_unimodular(rank, rng)


def _power(m: IntMatrix, e: int) -> IntMatrix:
    if e < 0:
        return _power(int_inverse(m), -e)
    out = IntMatrix.identity(m.rows)
    for _ in range(e):
        out = out @ m
    return out
