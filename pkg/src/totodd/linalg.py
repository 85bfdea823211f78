"""Exact rank, kernels and subspace dimensions over Q.

All routines work on dense integer matrices and use fraction-free (Bareiss)
elimination: every division performed is exact, which is checked as the
elimination runs.  Rational input is accepted by the vector helpers and
cleared to integers row by row before elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionMismatchError


@dataclass(frozen=True)
class ExactMatrix:
    """Dense integer matrix, stored as a tuple of row tuples.

    ``row_index``/``col_index`` optionally attach the IndexTables the rows
    and columns are labelled by.
    """

    rows: int
    cols: int
    entries: tuple
    row_index: object = None
    col_index: object = None

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DimensionMismatchError("entries do not have shape %dx%d" % (self.rows, self.cols))
        if self.row_index is not None and len(self.row_index) != self.rows:
            raise DimensionMismatchError("row index table has the wrong size")
        if self.col_index is not None and len(self.col_index) != self.cols:
            raise DimensionMismatchError("column index table has the wrong size")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None, row_index=None, col_index=None):
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries, row_index, col_index)

    @classmethod
    def identity(cls, n: int, index=None):
        return cls.from_rows(
            [[1 if i == k else 0 for k in range(n)] for i in range(n)], n, index, index
        )

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls.from_rows([[0] * cols for _ in range(rows)], cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)),
            self.col_index, self.row_index,
        )

    T = property(transpose)

    def __add__(self, other):
        _check_same_shape(self, other)
        return ExactMatrix(
            self.rows, self.cols,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
            self.row_index, self.col_index,
        )

    def __sub__(self, other):
        _check_same_shape(self, other)
        return ExactMatrix(
            self.rows, self.cols,
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
            self.row_index, self.col_index,
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatchError(
                "cannot multiply %dx%d by %dx%d" % (self.rows, self.cols, other.rows, other.cols)
            )
        # row-times-matrix with zero skipping; E-family matrices are sparse
        out = []
        b = other.entries
        for row in self.entries:
            acc = [0] * other.cols
            for k, a in enumerate(row):
                if a:
                    for j, x in enumerate(b[k]):
                        if x:
                            acc[j] += a * x
            out.append(tuple(acc))
        return ExactMatrix(self.rows, other.cols, tuple(out), self.row_index, other.col_index)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        return ExactMatrix.from_rows([row[c0:c1] for row in self.entries[r0:r1]], c1 - c0)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)


def _check_same_shape(a, b):
    if a.shape != b.shape:
        raise DimensionMismatchError("shape %r vs %r" % (a.shape, b.shape))


def vec_mat(v, m: ExactMatrix) -> list:
    """Row vector times matrix; entries of ``v`` may be ints or Fractions."""
    if len(v) != m.rows:
        raise DimensionMismatchError("vector of length %d against %d rows" % (len(v), m.rows))
    acc = [0] * m.cols
    for a, row in zip(v, m.entries):
        if a:
            for j, x in enumerate(row):
                if x:
                    acc[j] += a * x
    return acc


def mat_vec(m: ExactMatrix, v) -> list:
    if len(v) != m.cols:
        raise DimensionMismatchError("vector of length %d against %d cols" % (len(v), m.cols))
    return [sum(a * b for a, b in zip(row, v) if a) for row in m.entries]


def integer_row(v) -> list:
    """Scale a rational vector to integers by clearing denominators."""
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(x * den) for x in v]


def primitive(v) -> tuple:
    """Primitive integer representative with positive leading entry."""
    w = integer_row(v)
    g = 0
    for x in w:
        g = gcd(g, x)
    if g == 0:
        return tuple(w)
    lead = next(x for x in w if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in w)


# ---------------------------------------------------------------------------
# fraction-free elimination

def _exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("inexact Bareiss division %d / %d" % (num, den))
    return q


def bareiss(rows, ncols: int, reduced: bool = False):
    """Fraction-free elimination on a list of integer rows (modified in place).

    Pivots are the first nonzero entry in column order, taking the lowest
    row index.  With ``reduced=True`` entries above each pivot are cleared
    as well (fraction-free Gauss-Jordan); afterwards every pivot entry
    equals the same integer ``d``.

    Returns ``(pivot_cols, d)`` where ``d`` is the last pivot value.
    """
    nrows = len(rows)
    pivots = []
    prev = 1
    k = 0
    for c in range(ncols):
        if k == nrows:
            break
        p_row = next((i for i in range(k, nrows) if rows[i][c]), None)
        if p_row is None:
            continue
        if p_row != k:
            rows[k], rows[p_row] = rows[p_row], rows[k]
        pivot_row = rows[k]
        p = pivot_row[c]
        if reduced:
            # rows above: the pivot row is zero left of c, so every column
            # (including earlier pivots) is rescaled by p / prev
            for i in range(k):
                row = rows[i]
                f = row[c]
                for j in range(ncols):
                    if j != c:
                        row[j] = _exact_div(p * row[j] - f * pivot_row[j], prev)
                row[c] = 0
        for i in range(k + 1, nrows):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = _exact_div(p * row[j] - f * pivot_row[j], prev)
            row[c] = 0
        pivots.append(c)
        prev = p
        k += 1
    return pivots, prev


def rank(m) -> int:
    """Exact rank over Q.

    >>> rank(ExactMatrix.from_rows([[2, 4], [1, 2]]))
    1
    """
    rows = _as_int_rows(m)
    if not rows:
        return 0
    pivots, _ = bareiss(rows, len(rows[0]))
    return len(pivots)


def _as_int_rows(m):
    if isinstance(m, ExactMatrix):
        return [list(row) for row in m.entries]
    return [integer_row(row) for row in m]


@dataclass(frozen=True)
class KernelBasis:
    """Primitive-normalized integer basis of a kernel inside Q^ambient."""

    ambient: int
    vectors: tuple

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    @property
    def dim(self) -> int:
        return len(self.vectors)


def right_kernel(m: ExactMatrix) -> KernelBasis:
    """Basis of {v : m v^T = 0}, one vector per non-pivot column."""
    ncols = m.cols
    rows = _as_int_rows(m)
    if not rows:
        return KernelBasis(ncols, tuple(
            tuple(1 if i == k else 0 for i in range(ncols)) for k in range(ncols)
        ))
    pivots, d = bareiss(rows, ncols, reduced=True)
    pivot_set = set(pivots)
    vectors = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [0] * ncols
        v[f] = d
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        vectors.append(primitive(v))
    return KernelBasis(ncols, tuple(vectors))


def left_kernel(m: ExactMatrix) -> KernelBasis:
    """Basis of {v : v m = 0}."""
    return right_kernel(m.transpose())


def intersection_dim(a: ExactMatrix, b: ExactMatrix) -> int:
    """dim(row space of a  intersect  left kernel of b) = rank a - rank(a b)."""
    if a.cols != b.rows:
        raise DimensionMismatchError(
            "row space of a %dx%d cannot meet left kernel of b %dx%d" % (a.rows, a.cols, b.rows, b.cols)
        )
    return rank(a) - rank(a @ b)


def intersection_dim_direct(a: ExactMatrix, b: ExactMatrix) -> int:
    """Same quantity via dim U + dim W - dim(U + W) on explicit bases."""
    if a.cols != b.rows:
        raise DimensionMismatchError("incompatible shapes")
    kern = left_kernel(b)
    stacked = [list(row) for row in a.entries] + [list(v) for v in kern.vectors]
    return rank(a) + kern.dim - rank(stacked)


def span_rank(vectors) -> int:
    """Rank of a list of rational or integer vectors."""
    vectors = list(vectors)
    return rank(vectors) if vectors else 0


def in_span(v, vectors) -> bool:
    """True iff ``v`` lies in the span of ``vectors`` (rank comparison)."""
    vectors = list(vectors)
    if not any(v):
        return True
    return span_rank(vectors + [list(v)]) == span_rank(vectors)


def span_equal(u: KernelBasis, v: KernelBasis) -> bool:
    """True iff the two bases span the same subspace."""
    if u.ambient != v.ambient:
        raise DimensionMismatchError("ambient %d vs %d" % (u.ambient, v.ambient))
    du, dv = span_rank(u.vectors), span_rank(v.vectors)
    if du != dv:
        return False
    return span_rank(list(u.vectors) + list(v.vectors)) == du


def basis_of(vectors, ambient: int) -> KernelBasis:
    """Wrap arbitrary rational vectors as a normalized (not reduced) basis."""
    return KernelBasis(ambient, tuple(primitive(v) for v in vectors if any(v)))
