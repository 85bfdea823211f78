from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from totodd.errors import DimensionMismatchError
from totodd.linalg import (
    ExactMatrix,
    KernelBasis,
    bareiss,
    in_span,
    intersection_dim,
    intersection_dim_direct,
    left_kernel,
    mat_vec,
    primitive,
    rank,
    right_kernel,
    span_equal,
    vec_mat,
)
from totodd.matrices import build_E, build_Ej, build_C

from conftest import rref_rank

small_ints = st.integers(-4, 4)


@st.composite
def matrices(draw, max_side=6):
    rows = draw(st.integers(1, max_side))
    cols = draw(st.integers(1, max_side))
    data = draw(st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    # sprinkle in dependent rows so rank deficiency is common
    if rows >= 3 and draw(st.booleans()):
        a, b = draw(small_ints), draw(small_ints)
        data[-1] = [a * x + b * y for x, y in zip(data[0], data[1])]
    return ExactMatrix.from_rows(data, cols)


def test_rank_examples():
    assert rank(ExactMatrix.identity(4)) == 4
    assert rank(ExactMatrix.from_rows([[2, 4], [1, 2]])) == 1
    assert rank(build_E(12, 2)) == 3


def test_right_kernel_examples():
    zero = ExactMatrix.zeros(3, 3)
    assert right_kernel(zero).vectors == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert right_kernel(ExactMatrix.identity(5)).vectors == ()
    assert right_kernel(ExactMatrix.from_rows([[1, 1], [0, 0]])).vectors == ((1, -1),)


def test_left_kernel_examples():
    assert left_kernel(build_E(12, 2)).dim == 1
    assert left_kernel(ExactMatrix.identity(3)).dim == 0


def test_empty_matrix():
    m = ExactMatrix.from_rows([], 0)
    assert rank(m) == 0
    assert right_kernel(m).dim == 0


def test_intersection_examples():
    n = 4
    assert intersection_dim(ExactMatrix.identity(n), ExactMatrix.identity(n)) == 0
    assert intersection_dim(ExactMatrix.identity(n), ExactMatrix.zeros(n, n)) == n
    with pytest.raises(DimensionMismatchError):
        intersection_dim(ExactMatrix.identity(2), ExactMatrix.identity(3))


def test_intersection_splitting_at_15_3():
    a, b = build_Ej(15, 3, 2), build_E(15, 3)
    ker_c = 10 - rank(build_C(15, 3))
    assert intersection_dim(a, b) == ker_c - left_kernel(a).dim


def test_span_equal_examples():
    assert span_equal(KernelBasis(2, ((1, 0),)), KernelBasis(2, ((2, 0),)))
    assert not span_equal(KernelBasis(2, ((1, 0),)), KernelBasis(2, ((0, 1),)))


def test_primitive_normalization():
    assert primitive([Fraction(-2, 3), Fraction(4, 3), 0]) == (1, -2, 0)
    assert primitive([0, 0]) == (0, 0)


def test_in_span():
    assert in_span([2, 2], [[1, 1]])
    assert not in_span([1, 0], [[1, 1]])
    assert in_span([0, 0], [])


def test_exact_division_guard():
    from totodd.linalg import _exact_div

    assert _exact_div(-12, 4) == -3
    with pytest.raises(ArithmeticError):
        _exact_div(7, 2)


def test_bareiss_reduced_pivots_share_one_value():
    rows = [[2, 3, 5, 1], [7, 11, 13, 0], [4, 6, 10, 3]]
    pivots, d = bareiss(rows, 4, reduced=True)
    assert pivots == [0, 1, 3]
    assert [rows[i][c] for i, c in enumerate(pivots)] == [d, d, d]


@given(matrices())
@settings(max_examples=150)
def test_rank_agrees_with_rational_elimination(m):
    assert rank(m) == rref_rank(m.entries)
    assert rank(m) == rank(m.transpose())


@given(matrices())
@settings(max_examples=150)
def test_kernels_annihilate_and_have_right_size(m):
    rk = rank(m)
    kern = right_kernel(m)
    assert kern.dim == m.cols - rk
    assert rref_rank(kern.vectors) == kern.dim if kern.dim else True
    for v in kern:
        assert not any(mat_vec(m, v))
        lead = next(x for x in v if x)
        assert lead > 0
    lk = left_kernel(m)
    assert lk.vectors == right_kernel(m.transpose()).vectors
    for v in lk:
        assert not any(vec_mat(v, m))


@given(matrices(5), st.data())
@settings(max_examples=150)
def test_intersection_two_methods(a, data):
    cols = data.draw(st.integers(1, 5))
    rows = data.draw(st.lists(st.lists(small_ints, min_size=cols, max_size=cols),
                              min_size=a.cols, max_size=a.cols))
    b = ExactMatrix.from_rows(rows, cols)
    assert intersection_dim(a, b) == intersection_dim_direct(a, b)


@given(matrices(5))
def test_span_equal_is_scale_invariant(m):
    kern = right_kernel(m)
    scaled = KernelBasis(kern.ambient, tuple(tuple(3 * x for x in v) for v in kern))
    assert span_equal(kern, scaled)


def test_matmul_and_shapes():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).entries == ((2, 1), (4, 3))
    assert (a - a).is_zero()
    with pytest.raises(DimensionMismatchError):
        a @ ExactMatrix.identity(3)
    with pytest.raises(DimensionMismatchError):
        ExactMatrix(2, 2, ((1, 2),))
