"""Polynomials for the Ihara action and the restricted totally even spaces.

Two representations are used:

* :class:`Polynomial` -- sparse polynomial in ``nvars`` variables, keyed by
  exponent tuples, any exponents allowed.
* :class:`EvenPolynomial` -- element of V(N, r), keyed by odd compositions
  ``m`` standing for the monomial ``x_1^(m_1-1) ... x_r^(m_r-1)``.

:func:`restricted_even_part` is the only way to get from the first to the
second.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ArityMismatchError
from .indices import enumerate_S, is_odd_composition, position_of


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v}


def _canon(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Polynomial:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        for k, v in (terms or {}).items():
            k = tuple(k)
            if len(k) != nvars:
                raise ArityMismatchError("monomial %r in %d variables" % (k, nvars))
            if v:
                self.terms[k] = _canon(v)

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def constant(cls, nvars: int, c=1):
        return cls(nvars, {(0,) * nvars: c})

    def __repr__(self):
        return "Polynomial(%d, %r)" % (self.nvars, dict(sorted(self.terms.items(), reverse=True)))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ArityMismatchError("%d vs %d variables" % (self.nvars, other.nvars))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Polynomial(self.nvars, _clean(out))

    def __neg__(self):
        return Polynomial(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(self.nvars, {k: v * other for k, v in self.terms.items()})
        self._check(other)
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return Polynomial(self.nvars, _clean(out))

    __rmul__ = __mul__

    def degrees(self) -> set:
        return {sum(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Total degree of a homogeneous polynomial (0 for the zero polynomial)."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop() if degs else 0

    def compose(self, forms, nvars: int) -> "Polynomial":
        """Substitute linear forms for the variables.

        ``forms[k]`` is a tuple of ``(variable, coefficient)`` pairs in the
        target ring of ``nvars`` variables.
        """
        if len(forms) != self.nvars:
            raise ArityMismatchError("%d forms for %d variables" % (len(forms), self.nvars))
        out = {}
        for exps, c in self.terms.items():
            partial = {(0,) * nvars: c}
            for form, e in zip(forms, exps):
                if e:
                    partial = _mul_dicts(partial, _linear_power(tuple(form), e, nvars))
            for k, v in partial.items():
                out[k] = out.get(k, 0) + v
        return Polynomial(nvars, _clean(out))


def _mul_dicts(a: dict, b: dict) -> dict:
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = tuple(x + y for x, y in zip(k1, k2))
            out[k] = out.get(k, 0) + v1 * v2
    return out


@lru_cache(maxsize=None)
def _linear_power(form: tuple, e: int, nvars: int) -> dict:
    """Expand (c_a x_a + c_b x_b)^e by the binomial theorem."""
    if len(form) == 1:
        (v, c), = form
        k = [0] * nvars
        k[v] = e
        return {tuple(k): c ** e}
    if len(form) != 2:
        raise ValueError("only one- and two-term linear forms are supported")
    (va, ca), (vb, cb) = form
    out = {}
    for t in range(e + 1):
        k = [0] * nvars
        k[va] += e - t
        k[vb] += t
        k = tuple(k)
        out[k] = out.get(k, 0) + comb(e, t) * ca ** (e - t) * cb ** t
    return out


def _var(i):
    return ((i, 1),)


def _diff(hi, lo):
    """The form x_hi - x_lo."""
    return ((hi, 1), (lo, -1))


# ---------------------------------------------------------------------------
# Ihara action and the e-coefficients

def ihara_circ(f: Polynomial, g: Polynomial) -> Polynomial:
    """Polynomial representation of the Ihara action ``f o g``.

    ``f`` is in one variable, ``g`` in ``r - 1``; the result lives in ``r``
    variables::

        f(x1) g(x2..xr) + sum_i [ f(x_{i+1} - x_i) g(.., ^x_{i+1}, ..)
                                  - (-1)^deg f f(x_i - x_{i+1}) g(.., ^x_i, ..) ]
    """
    if f.nvars != 1:
        raise ArityMismatchError("f must be univariate, got %d variables" % f.nvars)
    if not f.is_homogeneous() or not g.is_homogeneous():
        raise ValueError("ihara_circ needs homogeneous inputs")
    r = g.nvars + 1
    sign = -1 if f.degree() % 2 else 1
    out = f.compose([_var(0)], r) * g.compose([_var(k) for k in range(1, r)], r)
    for i in range(r - 1):
        # 0-based: x_i -> variable i, x_{i+1} -> variable i + 1
        keep_i = [_var(k) for k in range(r) if k != i + 1]
        keep_next = [_var(k) for k in range(r) if k != i]
        out = out + f.compose([_diff(i + 1, i)], r) * g.compose(keep_i, r)
        out = out - sign * f.compose([_diff(i, i + 1)], r) * g.compose(keep_next, r)
    return out


@lru_cache(maxsize=None)
def ihara_expansion(m: tuple) -> Polynomial:
    """``x^(m_1-1) o (x_1^(m_2-1) ... x_{r-1}^(m_r-1))`` fully expanded."""
    f = Polynomial.monomial((m[0] - 1,))
    g = Polynomial.monomial(tuple(k - 1 for k in m[1:]))
    return ihara_circ(f, g)


def e_coefficient_expansion(m, n) -> int:
    """e(m; n) read off from the expanded Ihara action."""
    m, n = tuple(m), tuple(n)
    if len(m) != len(n) or sum(m) != sum(n):
        return 0
    if any(k < 1 for k in n):
        raise ValueError("n must have positive parts")
    return ihara_expansion(m).coefficient(tuple(k - 1 for k in n))


def e_coefficient_formula(m, n) -> int:
    """e(m; n) from the closed Kronecker-delta / binomial formula.

    For each i the delta compares m without m_1, m_{i+1} against n without
    n_i, n_{i+1}.
    """
    m, n = tuple(m), tuple(n)
    r = len(m)
    if len(n) != r or sum(m) != sum(n):
        return 0
    m1 = m[0]
    total = 1 if m == n else 0
    for i in range(1, r):
        # 1-based i; omit m_1 and m_{i+1}; omit n_i and n_{i+1}
        m_rest = m[1:i] + m[i + 1:]
        n_rest = n[:i - 1] + n[i + 1:]
        if m_rest != n_rest:
            continue
        ni, nn = n[i - 1], n[i]
        term = 0
        if 1 <= ni <= m1:
            term += (-1) ** ni * comb(m1 - 1, ni - 1)
        if 1 <= nn <= m1:
            term += (-1) ** ((m1 - nn) % 2) * comb(m1 - 1, nn - 1)
        total += term
    return total


# ---------------------------------------------------------------------------
# restricted totally even polynomials

class EvenPolynomial:
    """Element of V(N, r): rational combination of restricted even monomials."""

    __slots__ = ("N", "r", "coeffs")

    def __init__(self, N: int, r: int, coeffs=None):
        self.N = N
        self.r = r
        self.coeffs = {}
        for m, c in (coeffs or {}).items():
            m = tuple(m)
            if not is_odd_composition(m, N, r):
                raise ValueError("%r is not a totally odd composition of (%d, %d)" % (m, N, r))
            if c:
                self.coeffs[m] = _canon(Fraction(c))

    @classmethod
    def zero(cls, N: int, r: int):
        return cls(N, r)

    def __repr__(self):
        return "EvenPolynomial(%d, %d, %r)" % (self.N, self.r, dict(sorted(self.coeffs.items(), reverse=True)))

    def __eq__(self, other):
        if not isinstance(other, EvenPolynomial):
            return NotImplemented
        return (self.N, self.r, self.coeffs) == (other.N, other.r, other.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if (self.N, self.r) != (other.N, other.r):
            raise ArityMismatchError("V(%d,%d) vs V(%d,%d)" % (self.N, self.r, other.N, other.r))

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return EvenPolynomial(self.N, self.r, out)

    def __neg__(self):
        return EvenPolynomial(self.N, self.r, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return EvenPolynomial(self.N, self.r, {k: v * scalar for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def to_general(self) -> Polynomial:
        return Polynomial(self.r, {tuple(k - 1 for k in m): c for m, c in self.coeffs.items()})

    def to_json(self) -> str:
        terms = [
            {"m": list(m), "c": "%d/%d" % (Fraction(c).numerator, Fraction(c).denominator)}
            for m, c in sorted(self.coeffs.items(), reverse=True)
        ]
        return json.dumps({"N": self.N, "r": self.r, "terms": terms})

    @classmethod
    def from_json(cls, text: str) -> "EvenPolynomial":
        data = json.loads(text)
        return cls(data["N"], data["r"], {tuple(t["m"]): Fraction(t["c"]) for t in data["terms"]})


def restricted_even_part(p: Polynomial, N: int | None = None) -> EvenPolynomial:
    """Keep the monomials whose exponents are all even and >= 2.

    ``N`` must be given when ``p`` is zero; otherwise it is deg p + nvars.
    """
    r = p.nvars
    if N is None:
        if not p:
            raise ValueError("weight of the zero polynomial must be given")
        N = p.degree() + r
    kept = {}
    for exps, c in p.terms.items():
        if all(e >= 2 and e % 2 == 0 for e in exps):
            if sum(exps) + r != N:
                raise ValueError("monomial %r is not of weight %d" % (exps, N))
            kept[tuple(e + 1 for e in exps)] = c
    return EvenPolynomial(N, r, kept)


def pi(p: EvenPolynomial) -> list:
    """Coefficient vector of ``p`` over S(N, r) in lex-decreasing order."""
    table = enumerate_S(p.N, p.r)
    v = [0] * len(table)
    for m, c in p.coeffs.items():
        v[position_of(table, m)] = c
    return v


def pi_inverse(v, N: int, r: int) -> EvenPolynomial:
    table = enumerate_S(N, r)
    if len(v) != len(table):
        raise ValueError("vector of length %d for S(%d, %d) of size %d" % (len(v), N, r, len(table)))
    return EvenPolynomial(N, r, {m: c for m, c in zip(table.entries, v) if c})


@lru_cache(maxsize=None)
def _phi_monomial(m: tuple, j: int) -> tuple:
    """Restricted even part of phi_j applied to one restricted even monomial."""
    r = len(m)
    s = r - j
    q = Polynomial.monomial(tuple(k - 1 for k in m))
    total = q
    for i in range(s, r - 1):
        # 0-based i, i + 1 stand for x_i, x_{i+1} of the 1-based definition
        head = [_var(k) for k in range(s)] + [_diff(i + 1, i)]
        drop_next = head + [_var(k) for k in range(s, r) if k != i + 1]
        drop_this = head + [_var(k) for k in range(s, r) if k != i]
        total = total + q.compose(drop_next, r) - q.compose(drop_this, r)
    even = restricted_even_part(total, sum(m))
    return tuple(sorted(even.coeffs.items()))


def phi_j(q: EvenPolynomial, j: int) -> EvenPolynomial:
    """The endomorphism of V(N, r) matching right multiplication by E^(j).

    Acts on the last ``j`` variables; ``phi_j(q, 1)`` is the identity.
    """
    if not 1 <= j <= q.r:
        raise ValueError("j=%r out of range 1..%d" % (j, q.r))
    if j == 1:
        return EvenPolynomial(q.N, q.r, q.coeffs)
    out = {}
    for m, c in q.coeffs.items():
        for k, v in _phi_monomial(m, j):
            out[k] = out.get(k, 0) + c * v
    return EvenPolynomial(q.N, q.r, out)


def swap_substitutions(p: EvenPolynomial) -> Polynomial:
    """``P(x1..xr) - P(x2-x1, x2, x3..) + P(x2-x1, x1, x3..)``.

    Zero exactly when ``p`` satisfies the period relation defining W(N, r).
    """
    r = p.r
    if r < 2:
        raise ArityMismatchError("the period relation needs at least two variables")
    g = p.to_general()
    tail = [_var(k) for k in range(2, r)]
    a = g.compose([_diff(1, 0), _var(1)] + tail, r)
    b = g.compose([_diff(1, 0), _var(0)] + tail, r)
    return g - a + b
