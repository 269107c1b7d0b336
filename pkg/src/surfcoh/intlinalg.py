"""Exact integer matrix algebra.

Smith normal form by unimodular row/column operations, with the row
transform and its inverse tracked so that kernels, cokernels and
subquotients come with explicit generator lifts.  Entries are Python
ints, so nothing can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence


class CompositeNotZero(ValueError):
    """subquotient(B, A) was called with B*A != 0."""


class NonUnimodular(ValueError):
    """An exact integer inverse was requested for a singular matrix."""


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "IntMatrix":
        tup = tuple(tuple(int(x) for x in row) for row in rows)
        if tup and any(len(r) != len(tup[0]) for r in tup):
            raise ValueError("ragged rows")
        return IntMatrix(tup)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(tuple((0,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)) if self.entries else ())

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return IntMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in row) for row in self.entries))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        bt = other.transpose().entries
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                for row in self.entries
            )
        )

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(c * a for a in row) for row in self.entries))

    def apply_to(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.entries)

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.entries) + "]"


def hstack(blocks: Sequence[IntMatrix]) -> IntMatrix:
    if not blocks:
        raise ValueError("nothing to stack")
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ValueError("row count mismatch")
    return IntMatrix(
        tuple(sum((b.entries[i] for b in blocks), ()) for i in range(rows))
    )


def vstack(blocks: Sequence[IntMatrix]) -> IntMatrix:
    if not blocks:
        raise ValueError("nothing to stack")
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ValueError("column count mismatch")
    return IntMatrix(sum((b.entries for b in blocks), ()))


def kronecker(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            rows.append(
                tuple(
                    a.entries[i][j] * b.entries[k][l]
                    for j in range(a.cols)
                    for l in range(b.cols)
                )
            )
    return IntMatrix(tuple(rows))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == S with U, V unimodular and S diagonal, d1 | d2 | ...

    ``uinv`` is the exact inverse of ``U``; its columns lift cokernel
    generators back to the ambient coordinates.
    """

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    uinv: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(self.S.rows, self.S.cols)
        return tuple(self.S.entries[i][i] for i in range(n))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    m, n = a.rows, a.cols
    s = [list(row) for row in a.entries]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    uinv = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_swap(i: int, j: int) -> None:
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]
        for r in range(m):
            uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

    def col_swap(i: int, j: int) -> None:
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_neg(i: int) -> None:
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]
        for r in range(m):
            uinv[r][i] = -uinv[r][i]

    def row_add(i: int, j: int, q: int) -> None:
        # row_i += q * row_j; U follows, Uinv absorbs the inverse op.
        s[i] = [x + q * y for x, y in zip(s[i], s[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]
        for r in range(m):
            uinv[r][j] -= q * uinv[r][i]

    def col_add(i: int, j: int, q: int) -> None:
        # col_i += q * col_j on both S and V.
        for row in s:
            row[i] += q * row[j]
        for row in v:
            row[i] += q * row[j]

    def row_gcd_transform(t: int, i: int) -> None:
        # 2x2 unimodular transform making s[t][t] = gcd and s[i][t] = 0.
        p, q = s[t][t], s[i][t]
        g, x, y = _xgcd(p, q)
        pp, qq = p // g, q // g
        st, si = s[t], s[i]
        s[t] = [x * at + y * ai for at, ai in zip(st, si)]
        s[i] = [-qq * at + pp * ai for at, ai in zip(st, si)]
        ut, ui = u[t], u[i]
        u[t] = [x * at + y * ai for at, ai in zip(ut, ui)]
        u[i] = [-qq * at + pp * ai for at, ai in zip(ut, ui)]
        for r in range(m):
            ct, ci = uinv[r][t], uinv[r][i]
            uinv[r][t] = pp * ct + qq * ci
            uinv[r][i] = -y * ct + x * ci

    def col_gcd_transform(t: int, j: int) -> None:
        p, q = s[t][t], s[t][j]
        g, x, y = _xgcd(p, q)
        pp, qq = p // g, q // g
        for row in s:
            ct, cj = row[t], row[j]
            row[t] = x * ct + y * cj
            row[j] = -qq * ct + pp * cj
        for row in v:
            ct, cj = row[t], row[j]
            row[t] = x * ct + y * cj
            row[j] = -qq * ct + pp * cj

    def diagonalize() -> None:
        for t in range(min(m, n)):
            # Move a minimal nonzero entry of the trailing block to (t, t).
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if s[i][j] and (pivot is None or abs(s[i][j]) < abs(s[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return
            if pivot[0] != t:
                row_swap(t, pivot[0])
            if pivot[1] != t:
                col_swap(t, pivot[1])
            while True:
                for i in range(t + 1, m):
                    if s[i][t]:
                        row_gcd_transform(t, i)
                if all(s[t][j] == 0 for j in range(t + 1, n)):
                    break
                for j in range(t + 1, n):
                    if s[t][j]:
                        col_gcd_transform(t, j)
                if all(s[i][t] == 0 for i in range(t + 1, m)):
                    break

    diagonalize()
    # Repair the divisibility chain; each fix re-runs the cheap pass.
    while True:
        bad = None
        diag = [s[i][i] for i in range(min(m, n))]
        for i in range(len(diag) - 1):
            if diag[i] and diag[i + 1] % diag[i] != 0:
                bad = i
                break
        if bad is None:
            break
        col_add(bad, bad + 1, 1)
        diagonalize()
    for i in range(min(m, n)):
        if s[i][i] < 0:
            row_neg(i)

    return SmithDecomposition(
        U=IntMatrix.from_rows(u),
        S=IntMatrix.from_rows(s),
        V=IntMatrix.from_rows(v),
        uinv=IntMatrix.from_rows(uinv),
    )


def bareiss_det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = [list(row) for row in a.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def int_inverse(a: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular integer matrix, exactly."""
    if a.rows != a.cols:
        raise NonUnimodular("not square")
    snf = smith_normal_form(a)
    if any(d != 1 for d in snf.diagonal):
        raise NonUnimodular(f"invariant factors {snf.diagonal}")
    # U A V = I  =>  A^-1 = V U.
    return snf.V @ snf.U


def kernel_basis(a: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the (saturated) integer kernel lattice of ``a``."""
    snf = smith_normal_form(a)
    cols = []
    for j in range(a.cols):
        if j >= len(snf.diagonal) or snf.diagonal[j] == 0:
            cols.append(snf.V.col(j))
    return cols


def solve_right(a: IntMatrix, b: IntMatrix) -> IntMatrix | None:
    """An integer solution X of A @ X = B, or None if none exists."""
    if a.rows != b.rows:
        raise ValueError("row mismatch")
    snf = smith_normal_form(a)
    c = snf.U @ b
    diag = snf.diagonal
    rows = []
    for i in range(a.cols):
        d = diag[i] if i < len(diag) else 0
        row = []
        for j in range(b.cols):
            val = c.entries[i][j] if i < a.rows else 0
            if d == 0:
                if i < a.rows and val != 0:
                    return None
                row.append(0)
            else:
                if val % d != 0:
                    return None
                row.append(val // d)
        rows.append(tuple(row))
    for i in range(a.cols, a.rows):
        if any(c.entries[i][j] != 0 for j in range(b.cols)):
            return None
    return snf.V @ IntMatrix.from_rows(rows)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + Z/d_1 + ...``.

    ``generators`` are lifts in the ambient coordinates, free ones
    first, then one generator per invariant factor (d_1 | d_2 | ...).
    ``coord_rows``/``coord_mods`` implement the quotient map: the class
    of an ambient vector v has coordinates ``row . v`` (mod d for
    torsion rows).
    """

    free_rank: int
    torsion: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    coord_rows: tuple[tuple[int, ...], ...] = field(compare=False, default=())
    coord_mods: tuple[int, ...] = field(compare=False, default=())

    def iso_type(self) -> tuple[int, tuple[int, ...]]:
        return (self.free_rank, self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def coordinates(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Class of an ambient vector, free coords then torsion residues."""
        if not self.coord_rows and (self.free_rank or self.torsion):
            raise ValueError("no coordinate data attached")
        out = []
        for row, mod in zip(self.coord_rows, self.coord_mods):
            val = sum(r * x for r, x in zip(row, vec))
            out.append(val % mod if mod else val)
        return tuple(out)

    def class_is_zero(self, vec: Sequence[int]) -> bool:
        return all(c == 0 for c in self.coordinates(vec))

    def describe(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.describe()


def _group_from_cokernel_data(
    snf: SmithDecomposition,
    ambient: int,
    lift: Callable[[tuple[int, ...]], tuple[int, ...]] | None = None,
    coord_post: Callable[[tuple[int, ...]], tuple[int, ...]] | None = None,
) -> AbelianGroup:
    diag = list(snf.diagonal) + [0] * (ambient - len(snf.diagonal))
    free_idx = [i for i in range(ambient) if diag[i] == 0]
    tor_idx = [i for i in range(ambient) if diag[i] >= 2]
    gens: list[tuple[int, ...]] = []
    rows: list[tuple[int, ...]] = []
    mods: list[int] = []
    for i in free_idx + tor_idx:
        gen = snf.uinv.col(i)
        row = snf.U.row(i)
        # Normalise generator sign: first nonzero lift entry positive.
        lead = next((x for x in gen if x != 0), 0)
        if lead < 0:
            gen = tuple(-x for x in gen)
            row = tuple(-x for x in row)
        gens.append(lift(gen) if lift else gen)
        rows.append(coord_post(row) if coord_post else row)
        mods.append(0 if diag[i] == 0 else diag[i])
    return AbelianGroup(
        free_rank=len(free_idx),
        torsion=tuple(diag[i] for i in tor_idx),
        generators=tuple(gens),
        coord_rows=tuple(rows),
        coord_mods=tuple(mods),
    )


def cokernel(a: IntMatrix) -> AbelianGroup:
    """The quotient Z^rows / (column lattice of ``a``)."""
    snf = smith_normal_form(a)
    return _group_from_cokernel_data(snf, a.rows)


def subquotient(b: IntMatrix, a: IntMatrix) -> AbelianGroup:
    """ker(b) / im(a), with generators in the ambient space of b's domain.

    Requires b @ a == 0; the columns of ``a`` then lie in the kernel
    lattice and can be written exactly in a kernel basis.
    """
    if b.cols != a.rows:
        raise ValueError("b's domain must be a's codomain")
    if not (b @ a).is_zero:
        raise CompositeNotZero("composite map is nonzero")
    ker = kernel_basis(b)
    if not ker:
        return AbelianGroup(0, (), ())
    n_mat = IntMatrix.from_rows(list(zip(*ker)))  # ambient x kappa
    x = solve_right(n_mat, a)
    if x is None:  # cannot happen when b @ a == 0
        raise CompositeNotZero("columns of a are outside ker(b)")
    # Coordinates in the kernel basis are a left inverse of n_mat; the
    # kernel lattice is saturated, so the SNF of n_mat has unit diagonal.
    nsnf = smith_normal_form(n_mat)
    if any(d != 1 for d in nsnf.diagonal):
        raise AssertionError("kernel basis not saturated")
    kappa = len(ker)
    to_kernel_coords = nsnf.V @ IntMatrix.from_rows(nsnf.U.entries[:kappa])

    def lift(gen_in_kernel_coords: tuple[int, ...]) -> tuple[int, ...]:
        return n_mat.apply_to(gen_in_kernel_coords)

    def coord_post(row: tuple[int, ...]) -> tuple[int, ...]:
        return IntMatrix.from_rows([row]).__matmul__(to_kernel_coords).row(0)

    snf = smith_normal_form(x)
    return _group_from_cokernel_data(snf, kappa, lift=lift, coord_post=coord_post)


def free_group_on(vectors: Sequence[tuple[int, ...]]) -> AbelianGroup:
    """Free abelian group with the given independent generator lifts."""
    if not vectors:
        return AbelianGroup(0, (), ())
    n_mat = IntMatrix.from_rows(list(zip(*vectors)))
    nsnf = smith_normal_form(n_mat)
    if any(d != 1 for d in nsnf.diagonal) or nsnf.rank != len(vectors):
        raise ValueError("vectors do not form a saturated basis")
    kappa = len(vectors)
    coords = nsnf.V @ IntMatrix.from_rows(nsnf.U.entries[:kappa])
    return AbelianGroup(
        free_rank=kappa,
        torsion=(),
        generators=tuple(tuple(v) for v in vectors),
        coord_rows=tuple(coords.entries),
        coord_mods=(0,) * kappa,
    )


def spans_group(group: AbelianGroup, vectors: Iterable[Sequence[int]]) -> bool:
    """Do the classes of ``vectors`` generate the whole group?"""
    coords = [group.coordinates(v) for v in vectors]
    g = group.free_rank + len(group.torsion)
    if g == 0:
        return True
    cols = [tuple(c) for c in coords]
    # Relations of the cyclic decomposition: d * e_i for torsion slots.
    for k, d in enumerate(group.torsion):
        rel = [0] * g
        rel[group.free_rank + k] = d
        cols.append(tuple(rel))
    mat = IntMatrix.from_rows(list(zip(*cols))) if cols else IntMatrix.zeros(g, 0)
    return cokernel(mat).is_trivial


def random_unimodular(n: int, rng, steps: int | None = None) -> IntMatrix:
    """Random determinant +-1 matrix from elementary operations."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    if steps is None:
        steps = 3 * n + 2
    for _ in range(steps):
        op = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if op == 0 and i != j:
            q = rng.choice((-2, -1, 1, 2))
            m[i] = [x + q * y for x, y in zip(m[i], m[j])]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == 2:
            m[i] = [-x for x in m[i]]
    return IntMatrix.from_rows(m)
