"""Cochain complexes, cohomology groups, and cup products.

Applying Hom(-, K) to the resolution gives the three-term complex

    0 -> K --D1--> K^r --D2--> K -> 0,

with r the rank of P1.  H^0 is the kernel of D1, H^1 the subquotient
ker(D2)/im(D1), and H^2 the cokernel of D2, all with explicit integer
generators.  Degree (1,1) cup products are evaluated through the
diagonal; products with degree-0 classes act by module multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .coefficients import CoefficientModule, evaluate, tensor, trivial_module
from .diagonal import delta11_closed
from .groupring import fox_derivative
from .intlinalg import (
    AbelianGroup,
    IntMatrix,
    cokernel,
    free_group_on,
    hstack,
    kernel_basis,
    spans_group,
    subquotient,
    vstack,
)
from .presentation import Generator, PresentationMismatch, SurfacePresentation, relator
from .resolution import W, X, BasisLabel, Resolution, build_resolution, y, z


class NonCocycle(ValueError):
    """A cup product was requested on a cochain that is not a cocycle."""


class InternalCheckError(RuntimeError):
    """Two mandatory computations of the same group disagreed."""


@dataclass(frozen=True)
class Cochain:
    """Integer cochain: one vector of length rank per basis label."""

    module: CoefficientModule
    degree: int
    values: tuple[tuple[BasisLabel, tuple[int, ...]], ...]

    @staticmethod
    def make(
        module: CoefficientModule, degree: int, values: dict[BasisLabel, Sequence[int]]
    ) -> "Cochain":
        packed = []
        for label in sorted(values):
            if label.degree != degree:
                raise ValueError(f"label {label} has wrong degree")
            vec = tuple(int(x) for x in values[label])
            if len(vec) != module.rank:
                raise ValueError(f"value at {label} has length {len(vec)}, want {module.rank}")
            packed.append((label, vec))
        return Cochain(module, degree, tuple(packed))

    def value(self, label: BasisLabel) -> tuple[int, ...]:
        for lab, vec in self.values:
            if lab == label:
                return vec
        return (0,) * self.module.rank


@dataclass(frozen=True)
class CochainComplex:
    module: CoefficientModule
    res: Resolution = field(compare=False)
    labels: tuple[BasisLabel, ...]
    D1: IntMatrix
    D2: IntMatrix

    def flatten(self, c: Cochain) -> tuple[int, ...]:
        if c.degree != 1:
            raise ValueError("flatten applies to degree-1 cochains")
        out: list[int] = []
        for label in self.labels:
            out.extend(c.value(label))
        return tuple(out)

    def unflatten(self, vec: Sequence[int]) -> Cochain:
        k = self.module.rank
        values = {
            label: tuple(vec[i * k : (i + 1) * k]) for i, label in enumerate(self.labels)
        }
        return Cochain.make(self.module, 1, values)

    def is_cocycle(self, c: Cochain) -> bool:
        if c.degree == 1:
            return all(x == 0 for x in self.D2.apply_to(self.flatten(c)))
        if c.degree == 0:
            return all(x == 0 for x in self.D1.apply_to(c.value(X)))
        return True  # the complex stops after degree 2


def build_cochain_complex(res: Resolution, module: CoefficientModule) -> CochainComplex:
    """Assemble D1 (stacked theta(g) - I) and D2 (evaluated Fox blocks)."""
    if res.pres != module.pres:
        raise PresentationMismatch(f"{res.pres} vs {module.pres}")
    k = module.rank
    ident = IntMatrix.identity(k)
    d1_blocks = []
    d2_blocks = []
    for label in res.basis(1):
        d1_blocks.append(evaluate(module, res.d1_word(label)) - ident)
        d2_blocks.append(evaluate(module, res.d2_coefficient(label)))
    complex_ = CochainComplex(
        module=module,
        res=res,
        labels=res.basis(1),
        D1=vstack(d1_blocks),
        D2=hstack(d2_blocks),
    )
    if not (complex_.D2 @ complex_.D1).is_zero:
        raise InternalCheckError("D2 @ D1 != 0; the module action is inconsistent")
    return complex_


@lru_cache(maxsize=None)
def _complex_for(module: CoefficientModule) -> CochainComplex:
    return build_cochain_complex(build_resolution(module.pres), module)


@dataclass(frozen=True)
class CohomologyReport:
    module: CoefficientModule
    H0: AbelianGroup
    H1: AbelianGroup
    H2: AbelianGroup

    def groups(self) -> tuple[AbelianGroup, AbelianGroup, AbelianGroup]:
        return (self.H0, self.H1, self.H2)

    def iso_types(self):
        return tuple(g.iso_type() for g in self.groups())


def cohomology_groups(complex_: CochainComplex) -> CohomologyReport:
    h0 = free_group_on(kernel_basis(complex_.D1))
    h1 = subquotient(complex_.D2, complex_.D1)
    h2 = cokernel(complex_.D2)
    return CohomologyReport(module=complex_.module, H0=h0, H1=h1, H2=h2)


@lru_cache(maxsize=None)
def cohomology_of(module: CoefficientModule) -> CohomologyReport:
    return cohomology_groups(_complex_for(module))


def h2_lyndon(module: CoefficientModule) -> AbelianGroup:
    """H^2 as the coefficients modulo the evaluated relator derivatives.

    Independent route: the Fox derivatives of the relator are evaluated
    directly, without going through the resolution or the complex.
    """
    pres = module.pres
    rel = relator(pres)
    blocks = [evaluate(module, fox_derivative(rel, gen)) for gen in pres.generators()]
    return cokernel(hstack(blocks))


def euler_characteristic(pres: SurfacePresentation) -> int:
    return 2 - 2 * pres.genus if pres.orientable else 2 - pres.genus


# -- cup products ----------------------------------------------------


def _kron_vec(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(a * b for a in u for b in v)


def cup11_value(u: Cochain, v: Cochain) -> tuple[int, ...]:
    """The raw value on w of (u (x) v) composed with the (1,1) diagonal.

    Defined for arbitrary degree-1 cochains; no cocycle condition is
    assumed.  Useful as the bilinear core of ``cup11`` and for oracle
    comparisons.
    """
    if u.degree != 1 or v.degree != 1:
        raise ValueError("cup11 pairs degree-1 cochains")
    m_mod, n_mod = u.module, v.module
    if m_mod.pres != n_mod.pres:
        raise PresentationMismatch(f"{m_mod.pres} vs {n_mod.pres}")
    total = [0] * (m_mod.rank * n_mod.rank)
    for term in delta11_closed(m_mod.pres).sorted_terms():
        left_vec = evaluate(m_mod, term.left_word).apply_to(u.value(term.left_basis))
        right_vec = evaluate(n_mod, term.right_word).apply_to(v.value(term.right_basis))
        piece = _kron_vec(left_vec, right_vec)
        for i, x in enumerate(piece):
            total[i] += term.coeff * x
    return tuple(total)


def cup11(u: Cochain, v: Cochain) -> Cochain:
    """Cup product of two degree-1 cocycles, a degree-2 cochain over
    the tensor module.  Non-cocycles are rejected: the class of the
    product is only defined on cocycles."""
    if not _complex_for(u.module).is_cocycle(u):
        raise NonCocycle("left factor is not a cocycle")
    if not _complex_for(v.module).is_cocycle(v):
        raise NonCocycle("right factor is not a cocycle")
    value = cup11_value(u, v)
    return Cochain.make(tensor(u.module, v.module), 2, {W: value})


def cup_with_h0(module: CoefficientModule, m: Sequence[int], v: Cochain) -> Cochain:
    """Pair an invariant vector of ``module`` with a cochain.

    Replaces the missing (q,0)/(0,q) diagonal components: a degree-0
    class acts through module multiplication, sending v to
    Kron(m, v(e)) on every basis element e.
    """
    m = tuple(int(x) for x in m)
    if len(m) != module.rank:
        raise ValueError("vector length does not match the module rank")
    cx = _complex_for(module)
    if any(x != 0 for x in cx.D1.apply_to(m)):
        raise NonCocycle("vector is not invariant under the action")
    target = tensor(module, v.module)
    values = {label: _kron_vec(m, vec) for label, vec in v.values}
    return Cochain.make(target, v.degree, values)


def swap_tensor_vector(vec: Sequence[int], k_left: int, k_right: int) -> tuple[int, ...]:
    """Reindex M (x) N coordinates to N (x) M coordinates."""
    if len(vec) != k_left * k_right:
        raise ValueError("vector length mismatch")
    return tuple(vec[i * k_right + j] for j in range(k_right) for i in range(k_left))


# -- named generators for the built-in systems -----------------------


def _unit(labels: Sequence[BasisLabel], label: BasisLabel, k: int = 1) -> dict:
    return {label: (1,) * k}


def named_h1_generators(
    module: CoefficientModule,
) -> list[tuple[str, Cochain]] | None:
    """The classical degree-1 generator cochains, for rank-1 built-ins."""
    pres = module.pres
    n = pres.genus
    if module.rank != 1 or module.name is None:
        return None
    out: list[tuple[str, Cochain]] = []

    def mk(label_text: str, values: dict[BasisLabel, tuple[int, ...]]) -> None:
        out.append((label_text, Cochain.make(module, 1, values)))

    if pres.orientable:
        if module.name == "Z":
            for i in range(1, n + 1):
                mk(f"[y{i}*]", {y(i): (1,)})
            for i in range(1, n + 1):
                mk(f"[z{i}*]", {z(i): (1,)})
            return out
        if module.name == "Z~":
            for i in range(1, n):
                mk(f"[y{i}*]", {y(i): (1,)})
            for i in range(1, n + 1):
                mk(f"[z{i}*]", {z(i): (1,)})
            return out
        return None
    if module.name == "Z_theta0":
        for k in range(1, n):
            mk(f"[y{k}*-y{k + 1}*]", {y(k): (1,), y(k + 1): (-1,)})
        return out
    if module.name == "Z_theta1":
        mk("[y1*]", {y(1): (1,)})
        for k in range(2, n):
            mk(f"[y{k}*-y{k + 1}*]", {y(k): (1,), y(k + 1): (-1,)})
        return out
    if module.name == "Z_theta2":
        mk("[y1*]", {y(1): (1,)})
        mk("[y1*+y2*]", {y(1): (1,), y(2): (1,)})
        for k in range(3, n):
            mk(f"[y{k}*-y{k + 1}*]", {y(k): (1,), y(k + 1): (-1,)})
        return out
    return None


def h1_generator_cochains(module: CoefficientModule) -> list[tuple[str, Cochain]]:
    """Named generators when they exist and generate; else computed ones."""
    cx = _complex_for(module)
    h1 = cohomology_of(module).H1
    named = named_h1_generators(module)
    if named is not None:
        vectors = [cx.flatten(c) for _, c in named]
        expected = h1.free_rank + len(h1.torsion)
        if (
            len(named) == expected
            and all(cx.is_cocycle(c) for _, c in named)
            and spans_group(h1, vectors)
        ):
            return named
    return [
        (f"g{i + 1}", cx.unflatten(vec)) for i, vec in enumerate(h1.generators)
    ]


# -- tables and classification ---------------------------------------


@dataclass(frozen=True)
class CupTable:
    left: CoefficientModule
    right: CoefficientModule
    target: AbelianGroup
    left_generators: tuple[str, ...]
    right_generators: tuple[str, ...]
    entries: tuple[tuple[str, str, tuple[int, ...]], ...]

    def entry(self, left_label: str, right_label: str) -> tuple[int, ...]:
        for ll, rl, coords in self.entries:
            if ll == left_label and rl == right_label:
                return coords
        raise KeyError((left_label, right_label))


def cup_table(m_mod: CoefficientModule, n_mod: CoefficientModule) -> CupTable:
    """All pairwise products of H^1 generators, in H^2 coordinates."""
    left_gens = h1_generator_cochains(m_mod)
    right_gens = h1_generator_cochains(n_mod)
    h2 = cohomology_of(tensor(m_mod, n_mod)).H2
    entries = []
    for lname, u in left_gens:
        for rname, v in right_gens:
            product = cup11(u, v)
            coords = h2.coordinates(product.value(W))
            entries.append((lname, rname, coords))
    return CupTable(
        left=m_mod,
        right=n_mod,
        target=h2,
        left_generators=tuple(name for name, _ in left_gens),
        right_generators=tuple(name for name, _ in right_gens),
        entries=tuple(entries),
    )


@dataclass(frozen=True)
class BundleClassification:
    """H^2 with the prescribed action, computed two mandatory ways."""

    via_cohomology: AbelianGroup
    via_coinvariants: AbelianGroup

    @property
    def group(self) -> AbelianGroup:
        return self.via_cohomology


def classify_torus_bundles(
    pres: SurfacePresentation, module: CoefficientModule
) -> BundleClassification:
    """Principal-torus-bundle classification over an orientable surface.

    Bundles with holonomy ``module`` correspond to classes in H^2 with
    those coefficients; over an orientable base this is also the
    quotient of Z^n by all theta(g)x - x.  Both descriptions are
    computed and must agree.
    """
    if not pres.orientable:
        raise ValueError("the coinvariant description needs an orientable base")
    if module.pres != pres:
        raise PresentationMismatch(f"{module.pres} vs {pres}")
    via_h2 = cohomology_of(module).H2
    ident = IntMatrix.identity(module.rank)
    blocks = [module.matrix(gen) - ident for gen in pres.generators()]
    via_coinv = cokernel(hstack(blocks))
    if via_h2.iso_type() != via_coinv.iso_type():
        raise InternalCheckError(
            f"H^2 gives {via_h2} but the coinvariants give {via_coinv}"
        )
    return BundleClassification(via_cohomology=via_h2, via_coinvariants=via_coinv)
