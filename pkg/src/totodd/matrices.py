"""The E, E^(j), C and F matrices over the canonical index tables."""
from __future__ import annotations

from functools import lru_cache

from .indices import enumerate_S
from .linalg import ExactMatrix
from .polynomials import e_coefficient_formula
from .reports import theorem_record

KINDS = ("E", "Ej", "C", "F")


@lru_cache(maxsize=None)
def build_E(N: int, r: int) -> ExactMatrix:
    """E(N, r) with entry e(m; n) at (m, n), both in lex-decreasing order."""
    table = enumerate_S(N, r)
    rows = [[e_coefficient_formula(m, n) for n in table] for m in table]
    return ExactMatrix.from_rows(rows, len(table), table, table)


@lru_cache(maxsize=None)
def build_Ej(N: int, r: int, j: int) -> ExactMatrix:
    """E^(j)(N, r): identity on the first r - j coordinates, e on the rest."""
    if not 2 <= j <= r:
        raise ValueError("need 2 <= j <= r, got j=%r, r=%r" % (j, r))
    table = enumerate_S(N, r)
    s = r - j
    rows = [
        [e_coefficient_formula(m[s:], n[s:]) if m[:s] == n[:s] else 0 for n in table]
        for m in table
    ]
    return ExactMatrix.from_rows(rows, len(table), table, table)


@lru_cache(maxsize=None)
def build_prefix(N: int, r: int) -> ExactMatrix:
    """E^(2) E^(3) ... E^(r-1); the identity when r <= 2."""
    table = enumerate_S(N, r)
    out = ExactMatrix.identity(len(table), table)
    for j in range(2, r):
        out = out @ build_Ej(N, r, j)
    return out


@lru_cache(maxsize=None)
def build_C(N: int, r: int) -> ExactMatrix:
    """C(N, r) = E^(2) ... E^(r-1) E; equals E for r <= 2."""
    if r <= 2:
        return build_E(N, r)
    return build_prefix(N, r) @ build_E(N, r)


@lru_cache(maxsize=None)
def build_F(N: int, r: int) -> ExactMatrix:
    E = build_E(N, r)
    return E - ExactMatrix.identity(E.rows, E.row_index)


def build(kind: str, N: int, r: int, j: int | None = None) -> ExactMatrix:
    """Dispatch on the matrix kind tag (``E``, ``Ej``, ``C``, ``F``)."""
    if kind == "Ej":
        if j is None:
            raise ValueError("kind Ej needs j")
        return build_Ej(N, r, j)
    if j is not None:
        raise ValueError("kind %s takes no j" % kind)
    if kind == "E":
        return build_E(N, r)
    if kind == "C":
        return build_C(N, r)
    if kind == "F":
        return build_F(N, r)
    raise ValueError("unknown matrix kind %r" % kind)


def strata(N: int, r: int):
    """Consecutive row ranges of S(N, r) sharing the first coordinate.

    Yields ``(m1, start, stop)`` in table order, i.e. decreasing m1 and
    hence increasing block weight N - m1.
    """
    table = enumerate_S(N, r)
    start = 0
    while start < len(table):
        m1 = table[start][0]
        stop = start
        while stop < len(table) and table[stop][0] == m1:
            stop += 1
        yield m1, start, stop
        start = stop


def _compare_block_diag(M: ExactMatrix, N: int, r: int, block_of):
    """First mismatch of M against diag(block_of(N - m1)), or None."""
    for m1, start, stop in strata(N, r):
        block = block_of(N - m1)
        for a in range(M.rows):
            inside = start <= a < stop
            for b in range(start, stop):
                want = block[a - start, b - start] if inside else 0
                if M[a, b] != want:
                    return {"row": a, "col": b, "expected": want, "observed": M[a, b]}
    return None


def verify_block_diagonal(N: int, r: int, j: int):
    """E^(j)(N, r) == diag(E^(j)(k, r - 1)) over the first-coordinate strata."""
    if not 2 <= j <= r - 1:
        raise ValueError("need 2 <= j <= r - 1")
    M = build_Ej(N, r, j)
    order = [[m1, N - m1, stop - start] for m1, start, stop in strata(N, r)]
    mismatch = _compare_block_diag(M, N, r, lambda k: build_Ej(k, r - 1, j))
    return theorem_record(
        "block-diag", mismatch is None, N=N, r=r, j=j,
        expected="diag(E^(%d)_{k,%d})" % (j, r - 1),
        observed="match" if mismatch is None else "mismatch",
        detail={"blocks": order, "mismatch": mismatch},
    )


def verify_product_is_diag_C(N: int, r: int):
    """E^(2) ... E^(r-1) at (N, r) == diag(C(k, r - 1))."""
    if r < 3:
        raise ValueError("need r >= 3")
    M = build_prefix(N, r)
    mismatch = _compare_block_diag(M, N, r, lambda k: build_C(k, r - 1))
    order = [[m1, N - m1, stop - start] for m1, start, stop in strata(N, r)]
    return theorem_record(
        "product-diag-C", mismatch is None, N=N, r=r,
        expected="diag(C_{k,%d})" % (r - 1),
        observed="match" if mismatch is None else "mismatch",
        detail={"blocks": order, "mismatch": mismatch},
    )
