"""Partial diagonal approximation for the surface resolutions.

The chain map Delta: P -> P (x) P is produced two ways:

* closed formulas for Delta_0, Delta_1, Delta_02 and Delta_11;
* the recursion Delta_n = s~_{n-1} Delta_{n-1} d_n through the
  contracting homotopy s~ of P (x) P, expanded just far enough to read
  off the (1,1) component of Delta_2.

Both constructions emit the same collected terms, which is asserted by
the verification suite.  The (2,0) component of Delta_2 is never
needed: products with degree-0 classes go through the module action,
and a solvability check certifies that a consistent (2,0) component
exists after evaluation.

Sign convention for the tensor complex: d(u (x) v) = du (x) v +
(-1)^{deg u} u (x) dv.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .coefficients import CoefficientModule, evaluate
from .groupring import GroupRingElement
from .intlinalg import IntMatrix, kronecker, solve_right, vstack
from .presentation import (
    PresentationMismatch,
    SurfacePresentation,
    Word,
    relator,
    relator_block,
)
from .resolution import W, X, BasisLabel, ChainElement, Resolution, build_resolution, y, z

TermKey = tuple[Word, BasisLabel, Word, BasisLabel]


@dataclass(frozen=True)
class TensorTerm:
    coeff: int
    left_word: Word
    left_basis: BasisLabel
    right_word: Word
    right_basis: BasisLabel

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.left_basis.degree, self.right_basis.degree)


def _format_side(word: Word, label: BasisLabel) -> str:
    if word.is_identity:
        return str(label)
    if len(word) == 1:
        return f"{word}*{label}"
    return f"({word})*{label}"


class TensorElement:
    """Collected finite sum of terms c * (g*e (x) g'*e')."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: SurfacePresentation, terms: Mapping[TermKey, int] | None = None):
        self.pres = pres
        self.terms: dict[TermKey, int] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self.terms[key] = self.terms.get(key, 0) + coeff
            self.terms = {k: c for k, c in self.terms.items() if c}

    @staticmethod
    def zero(pres: SurfacePresentation) -> "TensorElement":
        return TensorElement(pres)

    def with_term(
        self,
        coeff: int,
        lword: Word,
        llabel: BasisLabel,
        rword: Word,
        rlabel: BasisLabel,
    ) -> "TensorElement":
        key = (lword, llabel, rword, rlabel)
        terms = dict(self.terms)
        terms[key] = terms.get(key, 0) + coeff
        return TensorElement(self.pres, terms)

    def add_term_inplace(self, coeff, lword, llabel, rword, rlabel) -> None:
        key = (lword, llabel, rword, rlabel)
        new = self.terms.get(key, 0) + coeff
        if new:
            self.terms[key] = new
        else:
            self.terms.pop(key, None)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.pres != other.pres:
            raise PresentationMismatch(f"{self.pres} vs {other.pres}")
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return TensorElement(self.pres, terms)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.pres, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, c: int) -> "TensorElement":
        return TensorElement(self.pres, {k: c * v for k, v in self.terms.items()})

    def act(self, g: Word) -> "TensorElement":
        """Diagonal action: g moves both tensor factors."""
        return TensorElement(
            self.pres,
            {(g * lw, ll, g * rw, rl): c for (lw, ll, rw, rl), c in self.terms.items()},
        )

    def project(self, p: int, q: int) -> "TensorElement":
        return TensorElement(
            self.pres,
            {
                key: c
                for key, c in self.terms.items()
                if key[1].degree == p and key[3].degree == q
            },
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[TensorTerm]:
        keys = sorted(
            self.terms,
            key=lambda k: (k[1], k[3], k[0].sort_key(), k[2].sort_key()),
        )
        return [TensorTerm(self.terms[k], *k) for k in keys]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.pres == other.pres
            and self.terms == other.terms
        )

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for t in self.sorted_terms():
            body = f"{_format_side(t.left_word, t.left_basis)} (x) {_format_side(t.right_word, t.right_basis)}"
            if t.coeff == 1:
                parts.append(("+", body))
            elif t.coeff == -1:
                parts.append(("-", body))
            else:
                parts.append(("+" if t.coeff > 0 else "-", f"{abs(t.coeff)}*{body}"))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def _chain_tensor_word(
    element: TensorElement, chain: ChainElement, rword: Word, rlabel: BasisLabel, sign: int
) -> None:
    """Accumulate sign * (chain (x) rword*rlabel) into ``element``."""
    for llabel, gre in chain.coords.items():
        for word, coeff in gre.terms.items():
            element.add_term_inplace(sign * coeff, word, llabel, rword, rlabel)


def delta0(pres: SurfacePresentation) -> TensorElement:
    """Degree 0: x maps to x (x) x."""
    e = pres.identity()
    return TensorElement.zero(pres).with_term(1, e, X, e, X)


def delta1(pres: SurfacePresentation, label: BasisLabel) -> TensorElement:
    """Degree 1: y_i maps to y_i (x) a_i x + x (x) y_i, likewise z_i."""
    if label.degree != 1:
        raise ValueError(f"{label} is not a degree-1 label")
    if label.name == "z" and not pres.orientable:
        raise ValueError("z labels only exist for orientable presentations")
    e = pres.identity()
    g = pres.letter("a" if label.name == "y" else "b", label.index)
    out = TensorElement.zero(pres)
    out.add_term_inplace(1, e, label, g, X)
    out.add_term_inplace(1, e, X, e, label)
    return out


def delta02(pres: SurfacePresentation) -> TensorElement:
    """The (0,2) component of Delta_2: w maps to x (x) w."""
    e = pres.identity()
    return TensorElement.zero(pres).with_term(1, e, X, e, W)


@lru_cache(maxsize=None)
def delta11_closed(pres: SurfacePresentation) -> TensorElement:
    """The (1,1) component of Delta_2 from the closed formulas."""
    res = build_resolution(pres)
    n = pres.genus
    out = TensorElement.zero(pres)
    one = GroupRingElement.one(pres)

    if pres.orientable:
        def u(i: int) -> Word:  # p_1 ... p_{i-1}
            return relator_block(pres, i - 1)

        def coeff_y(j: int) -> GroupRingElement:
            cj = pres.word(f"a{j} b{j} a{j}^-1")
            return GroupRingElement.from_word(u(j)) * (one - GroupRingElement.from_word(cj))

        def coeff_z(j: int) -> GroupRingElement:
            m = pres.word(f"b{j} a{j}^-1 b{j}^-1")
            return GroupRingElement.from_word(u(j) * pres.letter("a", j)) * (
                one - GroupRingElement.from_word(m)
            )

        def s0_prefix(i: int) -> ChainElement:
            # s0 of (p_1...p_{i-1}) x, assembled from the block derivatives.
            coords = {}
            for j in range(1, i):
                coords[y(j)] = coeff_y(j)
                coords[z(j)] = coeff_z(j)
            return ChainElement(pres, 1, coords)

        for i in range(1, n + 1):
            _chain_tensor_word(out, s0_prefix(i), u(i), y(i), 1)
        for i in range(1, n):
            ci = pres.word(f"a{i} b{i} a{i}^-1")
            left = s0_prefix(i) + ChainElement(
                pres,
                1,
                {
                    y(i): coeff_y(i),
                    z(i): GroupRingElement.from_word(u(i) * pres.letter("a", i)),
                },
            )
            _chain_tensor_word(out, left, u(i) * ci, y(i), -1)
        for i in range(1, n + 1):
            left = s0_prefix(i) + ChainElement(
                pres, 1, {y(i): GroupRingElement.from_word(u(i))}
            )
            _chain_tensor_word(out, left, u(i) * pres.letter("a", i), z(i), 1)
        for i in range(1, n):
            _chain_tensor_word(out, s0_prefix(i + 1), u(i + 1), z(i), -1)
        out.add_term_inplace(-1, pres.identity(), z(n), pres.letter("b", n), y(n))
        return out

    def r(i: int) -> Word:  # a_1^2 ... a_{i-1}^2
        return relator_block(pres, i - 1)

    def s0_prefix_np(i: int) -> ChainElement:
        coords = {}
        for j in range(1, i):
            coords[y(j)] = GroupRingElement.from_word(r(j)) * (
                one + GroupRingElement.from_word(pres.letter("a", j))
            )
        return ChainElement(pres, 1, coords)

    for i in range(1, n + 1):
        ri = r(i)
        ria = ri * pres.letter("a", i)
        _chain_tensor_word(out, s0_prefix_np(i), ri, y(i), 1)
        _chain_tensor_word(out, s0_prefix_np(i), ria, y(i), 1)
        out.add_term_inplace(1, ri, y(i), ria, y(i))
    return out


def _s0_representative(res: Resolution, g: Word) -> Word:
    """The reduced representative on which s0 is evaluated.

    The homotopy is only well defined after one representative is fixed
    per group element.  We keep every word produced by the recursion as
    its own representative, except (in the orientable case) words that
    differ from the relator by at most one letter, which collapse to
    that short remainder.  Any consistent choice yields a valid
    diagonal; this one reproduces the closed formulas exactly.
    """
    if not res.pres.orientable:
        return g
    stripped = res.relator.inverse() * g
    if len(stripped) <= 1:
        return stripped
    return g


def delta1_of_chain(res: Resolution, chain: ChainElement) -> TensorElement:
    """Extend Delta_1 over a degree-1 chain with ring coefficients."""
    if chain.degree != 1:
        raise ValueError("need a degree-1 chain")
    out = TensorElement.zero(res.pres)
    for label, gre in chain.coords.items():
        base = delta1(res.pres, label)
        for word, coeff in gre.terms.items():
            for (lw, ll, rw, rl), c in base.act(word).terms.items():
                out.add_term_inplace(coeff * c, lw, ll, rw, rl)
    return out


def delta11_recursive(res: Resolution) -> TensorElement:
    """The (1,1) component of Delta_2 via the contracting homotopy.

    Delta_2(w) = s~_1 Delta_1 d_2(w).  On a (0,1) term g x (x) g e the
    homotopy contributes s_0(g x) (x) g e to bidegree (1,1) plus a
    (0,2) term that would need s_1; only the (1,1) part is expanded.
    The (1,0) terms land in bidegree (2,0) and are dropped.
    """
    pres = res.pres
    out = TensorElement.zero(pres)
    middle = delta1_of_chain(res, res.d2_chain())
    for (lw, ll, rw, rl), coeff in middle.project(0, 1).terms.items():
        rep_left = _s0_representative(res, lw)
        rep_right = _s0_representative(res, rw)
        _chain_tensor_word(out, res.s0(rep_left), rep_right, rl, coeff)
    return out


def delta1_recursive(res: Resolution, label: BasisLabel) -> TensorElement:
    """Delta_1 via s~_0 Delta_0 d_1, for cross-checking the closed form."""
    pres = res.pres
    d1c = res.d1_coefficient(label)
    out = TensorElement.zero(pres)
    for word, coeff in d1c.terms.items():
        # s~_0(g x (x) g x) = s_0(g x) (x) g x + aug(g) x (x) s_0(g x)
        _chain_tensor_word(out, res.s0(word), word, X, coeff)
        for llab, gre in res.s0(word).coords.items():
            for w2, c2 in gre.terms.items():
                out.add_term_inplace(coeff * c2, pres.identity(), X, w2, llab)
    return out


def tensor_boundary(res: Resolution, element: TensorElement) -> TensorElement:
    """Boundary of P (x) P with the Koszul sign on the right factor."""
    pres = res.pres
    out = TensorElement.zero(pres)

    def differential(label: BasisLabel) -> dict[BasisLabel, GroupRingElement]:
        if label.degree == 1:
            return {X: res.d1_coefficient(label)}
        if label.degree == 2:
            return {lab: res.d2_coefficient(lab) for lab in res.basis(1)}
        return {}

    for (lw, ll, rw, rl), coeff in element.terms.items():
        for target, gre in differential(ll).items():
            for word, c in gre.terms.items():
                out.add_term_inplace(coeff * c, lw * word, target, rw, rl)
        sign = -1 if ll.degree % 2 else 1
        for target, gre in differential(rl).items():
            for word, c in gre.terms.items():
                out.add_term_inplace(sign * coeff * c, lw, ll, rw * word, target)
    return out


def evaluate_tensor(
    element: TensorElement, left: CoefficientModule, right: CoefficientModule
) -> dict[tuple[BasisLabel, BasisLabel], IntMatrix]:
    """Evaluate both words of every term; values are Kronecker products."""
    out: dict[tuple[BasisLabel, BasisLabel], IntMatrix] = {}
    size = left.rank * right.rank
    for (lw, ll, rw, rl), coeff in element.terms.items():
        mat = kronecker(evaluate(left, lw), evaluate(right, rw)).scale(coeff)
        key = (ll, rl)
        out[key] = out.get(key, IntMatrix.zeros(size, size)) + mat
    return {k: m for k, m in out.items() if not m.is_zero}


def _evaluations_agree(
    e1: TensorElement,
    e2: TensorElement,
    left: CoefficientModule,
    right: CoefficientModule,
) -> list[tuple[BasisLabel, BasisLabel]]:
    """Label pairs where the two evaluated elements differ."""
    v1 = evaluate_tensor(e1, left, right)
    v2 = evaluate_tensor(e2, left, right)
    size = left.rank * right.rank
    zero = IntMatrix.zeros(size, size)
    bad = []
    for key in sorted(set(v1) | set(v2)):
        if v1.get(key, zero) != v2.get(key, zero):
            bad.append(key)
    return bad


@dataclass(frozen=True)
class ChainIdentityReport:
    pres: SurfacePresentation
    left_name: str
    right_name: str
    counit_ok: bool
    degree1_chain_ok: bool
    component01_ok: bool
    residual_solvable: bool
    failures: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_chain_identity(
    pres: SurfacePresentation,
    left: CoefficientModule,
    right: CoefficientModule,
    delta11_override: TensorElement | None = None,
) -> ChainIdentityReport:
    """Evaluated consistency checks for the partial diagonal.

    (i)   counit: (aug (x) id) Delta_1 = id = (id (x) aug) Delta_1;
    (ii)  degree-1 chain map: boundary(Delta_1) = Delta_0 d_1;
    (iii) the (0,1) component of boundary(Delta_11 + Delta_02) matches
          the (0,1) component of Delta_1 d_2;
    (iv)  the (1,0) residual lies in the evaluated image of d_2 (x) 1,
          so a consistent (2,0) component exists.

    All checks run after evaluation through the module pair, which is
    where words equal in the group become equal matrices.
    """
    res = build_resolution(pres)
    failures: list[str] = []
    d11 = delta11_override if delta11_override is not None else delta11_closed(pres)
    kl, kr = left.rank, right.rank

    # (i) counit on every degree-1 generator.
    counit_ok = True
    for label in res.basis(1):
        d1e = delta1(pres, label)
        left_sum: dict[BasisLabel, IntMatrix] = {}
        right_sum: dict[BasisLabel, IntMatrix] = {}
        for (lw, ll, rw, rl), c in d1e.terms.items():
            if ll == X:
                right_sum[rl] = right_sum.get(rl, IntMatrix.zeros(kr, kr)) + evaluate(
                    right, rw
                ).scale(c)
            if rl == X:
                left_sum[ll] = left_sum.get(ll, IntMatrix.zeros(kl, kl)) + evaluate(
                    left, lw
                ).scale(c)
        if right_sum != {label: IntMatrix.identity(kr)} or left_sum != {
            label: IntMatrix.identity(kl)
        }:
            counit_ok = False
            failures.append(f"counit identity at {label}")

    # (ii) chain map in degree 1.
    degree1_ok = True
    for label in res.basis(1):
        lhs = tensor_boundary(res, delta1(pres, label))
        rhs = TensorElement.zero(pres)
        for word, coeff in res.d1_coefficient(label).terms.items():
            rhs.add_term_inplace(coeff, word, X, word, X)
        bad = _evaluations_agree(lhs, rhs, left, right)
        if bad:
            degree1_ok = False
            failures.append(f"degree-1 chain map at {label}")

    # (iii) the (0,1) component in degree 2.
    lhs01 = tensor_boundary(res, d11 + delta02(pres)).project(0, 1)
    rhs_full = delta1_of_chain(res, res.d2_chain())
    bad01 = _evaluations_agree(lhs01, rhs_full.project(0, 1), left, right)
    component01_ok = not bad01
    for ll, rl in bad01:
        failures.append(f"(0,1) chain-map component at ({ll}, {rl})")

    # (iv) solvability of the (1,0) residual against d_2 (x) 1.
    residual = rhs_full.project(1, 0) - tensor_boundary(res, d11).project(1, 0)
    values = evaluate_tensor(residual, left, right)
    size = kl * kr
    blocks_a = []
    blocks_b = []
    for label in res.basis(1):
        d_block = kronecker(evaluate(left, res.d2_coefficient(label)), IntMatrix.identity(kr))
        r_block = values.get((label, X), IntMatrix.zeros(size, size))
        blocks_a.append(d_block.transpose())
        blocks_b.append(r_block.transpose())
    solvable = solve_right(vstack(blocks_a), vstack(blocks_b)) is not None
    if not solvable:
        failures.append("(1,0) residual outside the image of d2 (x) 1")

    return ChainIdentityReport(
        pres=pres,
        left_name=left.display_name(),
        right_name=right.display_name(),
        counit_ok=counit_ok,
        degree1_chain_ok=degree1_ok,
        component01_ok=component01_ok,
        residual_solvable=solvable,
        failures=tuple(failures),
    )


def format_diagonal(pres: SurfacePresentation) -> list[str]:
    """Text rendering of the partial diagonal, for reports."""
    res = build_resolution(pres)
    lines = [f"Delta0(x) = {delta0(pres)}"]
    for label in res.basis(1):
        lines.append(f"Delta1({label}) = {delta1(pres, label)}")
    lines.append(f"Delta02(w) = {delta02(pres)}")
    lines.append(f"Delta11(w) = {delta11_closed(pres)}")
    return lines
