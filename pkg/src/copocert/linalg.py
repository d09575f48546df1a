"""Exact rational linear algebra: symmetric matrices, kernels, affine solves.

All arithmetic uses ``fractions.Fraction``; nothing here ever rounds, so rank
and nullity results are decisions, not estimates.  Elimination is
fraction-free: rows are first scaled to primitive integer vectors, then
reduced with the Bareiss two-row determinant update, which keeps every
intermediate entry an integer and bounds coefficient growth.  The pivot is
always the first nonzero entry in column order, so echelon forms, kernel
bases and downstream certificates are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_vector(entries) -> Vector:
    return tuple(Fraction(e) for e in entries)


def dot(u, v) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def _primitive_int_row(row) -> list[int]:
    """Scale a rational row to integers with gcd 1 (zero rows stay zero)."""
    denom = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    ints = [int(Fraction(x) * denom) for x in row]
    g = gcd(*ints) if ints else 0
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def canonical_vector(entries) -> Vector:
    """Primitive integer multiple of a rational vector, first nonzero > 0.

    Used to normalize kernel basis vectors so certificates are byte-stable.
    """
    ints = _primitive_int_row(entries)
    lead = next((x for x in ints if x != 0), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


def _bareiss_echelon(int_rows, ncols):
    """Fraction-free row echelon form of an integer matrix.

    Returns ``(rows, pivots)`` where ``pivots`` is a list of ``(row, col)``
    pairs.  Only columns ``< ncols`` are eligible as pivots; trailing columns
    (an augmented right-hand side) ride along.  Division in the Bareiss update
    is exact; this is asserted rather than assumed.
    """
    mat = [list(r) for r in int_rows]
    m = len(mat)
    width = len(mat[0]) if m else ncols
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, m) if mat[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        piv = mat[r][c]
        for i in range(r + 1, m):
            f = mat[i][c]
            row_i = mat[i]
            row_r = mat[r]
            for j in range(c, width):
                num = piv * row_i[j] - f * row_r[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = q
        pivots.append((r, c))
        prev = piv
        r += 1
        if r == m:
            break
    return mat, pivots


def _prepare(rows, ncols):
    int_rows = [_primitive_int_row(r) for r in rows]
    if int_rows and ncols is None:
        ncols = len(int_rows[0])
    if ncols is None:
        raise ValueError("ncols is required for a matrix with no rows")
    if ncols < 1:
        raise ValueError("matrix must have at least one column")
    for r in int_rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix rows")
    return int_rows, ncols


def rank_nullity(rows, ncols=None) -> tuple[int, int]:
    """Exact ``(rank, nullity)`` of a rectangular rational matrix."""
    int_rows, ncols = _prepare(rows, ncols)
    _, pivots = _bareiss_echelon(int_rows, ncols)
    return len(pivots), ncols - len(pivots)


def _back_substitute(ech, pivots, x, rhs_col=None):
    # pivot rows are processed bottom-up; free coordinates of x are already set
    for pr, pc in reversed(pivots):
        s = ZERO
        row = ech[pr]
        for j in range(pc + 1, len(x)):
            if row[j] and x[j]:
                s += row[j] * x[j]
        top = (Fraction(row[rhs_col]) if rhs_col is not None else ZERO) - s
        x[pc] = top / row[pc]
    return x


def _kernel_from_echelon(ech, pivots, ncols):
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        x = [ZERO] * ncols
        x[f] = ONE
        _back_substitute(ech, pivots, x)
        basis.append(canonical_vector(x))
    return basis


def kernel_basis(rows, ncols=None) -> list[Vector]:
    """Basis of ``{x : Mx = 0}`` with deterministic primitive entries.

    Empty list iff M has full column rank; a matrix with no rows (or only
    zero rows) yields the standard basis.
    """
    int_rows, ncols = _prepare(rows, ncols)
    ech, pivots = _bareiss_echelon(int_rows, ncols)
    return _kernel_from_echelon(ech, pivots, ncols)


@dataclass(frozen=True)
class AffineSolutionSet:
    """Solution set of a linear system: one particular point plus a kernel.

    ``particular`` is ``None`` when the system is infeasible, in which case
    the kernel tuple is empty.  Kernel vectors are linearly independent and
    each solves the homogeneous system exactly.
    """

    dimension: int
    particular: Vector | None
    kernel: tuple[Vector, ...]

    @property
    def feasible(self) -> bool:
        return self.particular is not None

    @classmethod
    def subspace(cls, ncols, kernel) -> "AffineSolutionSet":
        """The span of ``kernel`` inside an ``ncols``-dimensional space."""
        return cls(len(kernel), tuple([ZERO] * ncols), tuple(kernel))


def solve_affine(rows, rhs, ncols=None) -> AffineSolutionSet:
    """Full solution set of ``Mx = b`` (particular solution + kernel basis)."""
    if len(rows) != len(rhs):
        raise ValueError("rows and rhs lengths differ")
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if not aug:
        if ncols is None:
            raise ValueError("ncols is required for a system with no rows")
        ident = kernel_basis([], ncols)
        return AffineSolutionSet(ncols, tuple([ZERO] * ncols), tuple(ident))
    if ncols is None:
        ncols = len(rows[0])
    int_rows = [_primitive_int_row(r) for r in aug]
    ech, pivots = _bareiss_echelon(int_rows, ncols)
    for i in range(len(pivots), len(ech)):
        if ech[i][ncols] != 0:
            return AffineSolutionSet(0, None, ())
    x = [ZERO] * ncols
    _back_substitute(ech, pivots, x, rhs_col=ncols)
    kern = _kernel_from_echelon(ech, pivots, ncols)
    return AffineSolutionSet(len(kern), tuple(x), tuple(kern))


def upper_size(n: int) -> int:
    return n * (n + 1) // 2


def upper_index(n: int, i: int, j: int) -> int:
    """Position of entry (i, j) in row-major upper-triangle storage."""
    if i > j:
        i, j = j, i
    if not (0 <= i <= j < n):
        raise IndexError(f"entry ({i},{j}) outside order-{n} matrix")
    return i * n - i * (i - 1) // 2 + (j - i)


@dataclass(frozen=True)
class SymMatrix:
    """Order-n symmetric matrix with exact rational entries.

    Only the upper triangle is stored (row-major), so symmetry is structural
    rather than validated data: ``get(i, j) == get(j, i)`` by construction.
    """

    n: int
    upper: Vector

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("matrix order must be >= 1")
        if len(self.upper) != upper_size(self.n):
            raise ValueError("upper triangle has wrong length")

    @classmethod
    def from_upper(cls, n, entries) -> "SymMatrix":
        return cls(n, as_vector(entries))

    @classmethod
    def from_rows(cls, rows) -> "SymMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        rows = [[Fraction(x) for x in r] for r in rows]
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"asymmetric entries at ({i},{j})/({j},{i})")
        return cls(n, tuple(rows[i][j] for i in range(n) for j in range(i, n)))

    @classmethod
    def identity(cls, n) -> "SymMatrix":
        return cls(n, tuple(ONE if i == j else ZERO
                            for i in range(n) for j in range(i, n)))

    @classmethod
    def all_ones(cls, n) -> "SymMatrix":
        return cls(n, tuple([ONE] * upper_size(n)))

    @classmethod
    def rank_one(cls, x) -> "SymMatrix":
        v = as_vector(x)
        n = len(v)
        return cls(n, tuple(v[i] * v[j] for i in range(n) for j in range(i, n)))

    def get(self, i, j) -> Fraction:
        return self.upper[upper_index(self.n, i, j)]

    def row(self, i) -> Vector:
        return tuple(self.get(i, j) for j in range(self.n))

    def rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.n)]

    def diagonal(self) -> Vector:
        return tuple(self.get(i, i) for i in range(self.n))

    def has_unit_diagonal(self) -> bool:
        return all(d == 1 for d in self.diagonal())

    def apply(self, x) -> Vector:
        """Matrix-vector product ``A x``."""
        if len(x) != self.n:
            raise ValueError("vector length does not match matrix order")
        return tuple(dot(self.row(i), x) for i in range(self.n))

    def principal(self, indices) -> "SymMatrix":
        """Principal submatrix on the given (sorted ascending) index set."""
        idx = sorted(indices)
        if not idx:
            raise ValueError("principal submatrix needs a nonempty index set")
        return SymMatrix(len(idx), tuple(self.get(a, b)
                                         for p, a in enumerate(idx)
                                         for b in idx[p:]))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.upper)

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in self.row(i))
                         for i in range(self.n))


def eval_quadratic(A: SymMatrix, x) -> Fraction:
    """The quadratic form ``x^T A x``, exactly."""
    if len(x) != A.n:
        raise ValueError("vector length does not match matrix order")
    total = ZERO
    for i in range(A.n):
        if x[i] == 0:
            continue
        total += A.get(i, i) * x[i] * x[i]
        for j in range(i + 1, A.n):
            if x[j] != 0:
                total += 2 * A.get(i, j) * x[i] * x[j]
    return total


def is_proportional(u, v) -> bool:
    """Whether two vectors are rational multiples of one another.

    Decided by cross-multiplication, so no divisions occur.
    """
    if len(u) != len(v):
        return False
    r = next((i for i, a in enumerate(u) if a != 0), None)
    if r is None:
        return all(b == 0 for b in v)
    return all(u[r] * v[j] == v[r] * u[j] for j in range(len(u)))


def horn_matrix() -> SymMatrix:
    """The order-5 Horn matrix: unit diagonal, -1 on cyclically adjacent
    index pairs, +1 on the remaining pairs."""
    def entry(i, j):
        if i == j:
            return ONE
        return -ONE if (j - i) % 5 in (1, 4) else ONE

    return SymMatrix(5, tuple(entry(i, j) for i in range(5) for j in range(i, 5)))
