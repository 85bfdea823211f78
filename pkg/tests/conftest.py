from fractions import Fraction

import pytest


def rref_rank(rows):
    """Rank by ordinary Gauss-Jordan over Fractions; independent of Bareiss."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        m[rank] = [x / p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def positive_compositions(N, r):
    if r == 1:
        if N >= 1:
            yield (N,)
        return
    for a in range(1, N - r + 2):
        for rest in positive_compositions(N - a, r - 1):
            yield (a,) + rest


@pytest.fixture
def oracle_rank():
    return rref_rank
