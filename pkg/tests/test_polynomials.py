import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from totodd.errors import ArityMismatchError
from totodd.indices import enumerate_S
from totodd.linalg import vec_mat
from totodd.matrices import build_Ej
from totodd.polynomials import (
    EvenPolynomial,
    Polynomial,
    e_coefficient_expansion,
    e_coefficient_formula,
    ihara_circ,
    phi_j,
    pi,
    pi_inverse,
    restricted_even_part,
    swap_substitutions,
)

from conftest import positive_compositions


def evaluate(p: Polynomial, point):
    total = Fraction(0)
    for exps, c in p.terms.items():
        term = Fraction(c)
        for x, e in zip(point, exps):
            term *= x ** e
        total += term
    return total


def ihara_pointwise(f, g, point):
    """The defining formula evaluated at a point, no expansion involved."""
    r = len(point)
    x = point
    sign = (-1) ** f.degree()
    val = evaluate(f, [x[0]]) * evaluate(g, x[1:])
    for i in range(r - 1):
        drop_next = x[:i + 1] + x[i + 2:]
        drop_this = x[:i] + x[i + 1:]
        val += evaluate(f, [x[i + 1] - x[i]]) * evaluate(g, drop_next)
        val -= sign * evaluate(f, [x[i] - x[i + 1]]) * evaluate(g, drop_this)
    return val


def test_ihara_hand_expansions():
    x2 = Polynomial.monomial((2,))
    got = ihara_circ(x2, Polynomial.monomial((2,)))
    # x1^2 x2^2 + (x2 - x1)^2 (x1^2 - x2^2)
    assert got == Polynomial(2, {(4, 0): 1, (3, 1): -2, (2, 2): 1, (1, 3): 2, (0, 4): -1})
    assert ihara_circ(Polynomial.monomial((4,)), Polynomial.monomial((2,))).coefficient((2, 4)) == -5
    one = ihara_circ(Polynomial.constant(1), Polynomial.constant(1))
    assert one == Polynomial.constant(nvars=2, c=1)


def test_ihara_arity_error():
    with pytest.raises(ArityMismatchError):
        ihara_circ(Polynomial.monomial((1, 1)), Polynomial.monomial((2,)))


@pytest.mark.parametrize("fdeg,gexps", [(2, (2,)), (3, (1, 2)), (4, (2, 0, 2)), (6, (4, 2)), (0, (3,))])
def test_ihara_matches_pointwise_definition(fdeg, gexps):
    rng = random.Random(fdeg * 100 + sum(gexps))
    f = Polynomial.monomial((fdeg,), 3) + Polynomial.monomial((fdeg,), Fraction(-1, 2))
    g = Polynomial.monomial(gexps)
    h = ihara_circ(f, g)
    assert h.degree() == fdeg + sum(gexps)
    for _ in range(5):
        point = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(len(gexps) + 1)]
        assert evaluate(h, point) == ihara_pointwise(f, g, point)


@pytest.mark.parametrize("m,n,expected", [
    ((3, 3), (3, 3), 1),
    ((5, 3), (3, 5), -5),
    ((3, 5), (3, 5), 0),
])
def test_e_examples(m, n, expected):
    assert e_coefficient_expansion(m, n) == expected
    assert e_coefficient_formula(m, n) == expected


def test_e_weight_mismatch_is_zero():
    assert e_coefficient_expansion((3, 3), (3, 5)) == 0
    assert e_coefficient_formula((3, 3), (3, 5)) == 0


def test_e_depth_three_cross_check():
    assert e_coefficient_formula((3, 3, 3), (3, 3, 3)) == e_coefficient_expansion((3, 3, 3), (3, 3, 3))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_formula_matches_expansion_small_weights(r):
    for N in range(3 * r, 16):
        for m in enumerate_S(N, r):
            for n in positive_compositions(N, r):
                assert e_coefficient_formula(m, n) == e_coefficient_expansion(m, n), (m, n)


def test_restricted_even_part_examples():
    p = Polynomial(2, {(2, 2): 1, (3, 1): -2, (4, 0): 1})
    assert restricted_even_part(p) == EvenPolynomial(6, 2, {(3, 3): 1})
    assert restricted_even_part(Polynomial(2), 6) == EvenPolynomial.zero(6, 2)
    assert restricted_even_part(Polynomial(2, {(3, 3): 1})) == EvenPolynomial.zero(8, 2)


def test_pi_examples():
    assert pi(EvenPolynomial.zero(12, 2)) == [0, 0, 0, 0]
    assert pi(EvenPolynomial(12, 2, {(3, 9): 1})) == [0, 0, 0, 1]


def random_even(rng, N, r):
    return EvenPolynomial(N, r, {m: Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for m in enumerate_S(N, r)})


def test_pi_round_trip_and_json():
    rng = random.Random(5)
    for N, r in [(12, 2), (15, 3), (18, 4)]:
        p = random_even(rng, N, r)
        assert pi_inverse(pi(p), N, r) == p
        assert EvenPolynomial.from_json(p.to_json()) == p


def test_even_polynomial_rejects_bad_keys():
    with pytest.raises(ValueError):
        EvenPolynomial(12, 2, {(6, 6): 1})


def test_phi_examples():
    rng = random.Random(7)
    q = random_even(rng, 15, 3)
    assert phi_j(q, 1) == q
    x = EvenPolynomial(6, 2, {(3, 3): 1})
    assert phi_j(x, 2).coeffs[(3, 3)] == 1
    with pytest.raises(ValueError):
        phi_j(q, 4)


@pytest.mark.parametrize("N,r,j", [(12, 2, 2), (15, 3, 2), (15, 3, 3), (18, 4, 2), (18, 4, 3), (20, 4, 4)])
def test_phi_commutes_with_matrix(N, r, j):
    rng = random.Random(N * 31 + r * 7 + j)
    E = build_Ej(N, r, j)
    for _ in range(20):
        q = random_even(rng, N, r)
        assert pi(phi_j(q, j)) == vec_mat(pi(q), E)


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(0, 2**16), st.sampled_from([(15, 3, 2), (18, 4, 3), (14, 2, 2)]))
@settings(max_examples=40, deadline=None)
def test_phi_linearity(a, b, seed, params):
    N, r, j = params
    rng = random.Random(seed)
    q1, q2 = random_even(rng, N, r), random_even(rng, N, r)
    assert phi_j(q1 * a + q2 * b, j) == phi_j(q1, j) * a + phi_j(q2, j) * b


@given(st.integers(0, 2**16))
@settings(max_examples=30, deadline=None)
def test_restricted_even_part_is_a_projection(seed):
    rng = random.Random(seed)
    r = 3
    terms = {}
    for _ in range(8):
        e = [rng.randint(0, 6) for _ in range(r - 1)]
        last = 12 - sum(e)
        if last >= 0:
            terms[tuple(e) + (last,)] = rng.randint(-4, 4)
    p = Polynomial(r, terms)
    once = restricted_even_part(p, 15)
    assert restricted_even_part(once.to_general(), 15) == once
    doubled = restricted_even_part(p * 2, 15)
    assert doubled == once * 2


def test_swap_substitutions_vanishes_on_period_polynomial():
    p = EvenPolynomial(12, 2, {(3, 9): 1, (5, 7): -3, (7, 5): 3, (9, 3): -1})
    assert not swap_substitutions(p)
    assert swap_substitutions(EvenPolynomial(12, 2, {(3, 9): 1}))
