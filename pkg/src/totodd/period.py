"""Restricted even period polynomials and the kernel/image checks built on them.

``W(N, 2)`` is solved for directly from its functional equation; ``W(N, r)``
for r > 2 is assembled as sums of ``W(n, 2)`` times restricted even
monomials in x_3..x_r, and every element produced is re-checked against
the r-variable functional equation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import TheoremViolation
from .indices import count_S, enumerate_S
from .linalg import (
    ExactMatrix,
    basis_of,
    in_span,
    intersection_dim,
    left_kernel,
    right_kernel,
    span_equal,
    span_rank,
    vec_mat,
)
from .matrices import build_E, build_Ej, build_F, build_prefix
from .polynomials import EvenPolynomial, phi_j, pi, swap_substitutions
from .reports import conjecture_record, theorem_record
from functools import lru_cache


class MembershipError(ValueError):
    """A polynomial handed to a restricted map is not in W(N, r)."""


@dataclass(frozen=True)
class PeriodSpaceBasis:
    N: int
    r: int
    basis: tuple

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list:
        return [pi(p) for p in self.basis]

    def contains(self, q: EvenPolynomial) -> bool:
        if (q.N, q.r) != (self.N, self.r):
            return False
        return in_span(pi(q), self.vectors())


def satisfies_period_relation(p: EvenPolynomial) -> bool:
    return not swap_substitutions(p)


@lru_cache(maxsize=None)
def w2_basis(N: int) -> PeriodSpaceBasis:
    """Basis of W(N, 2) from the kernel of the period relation on V(N, 2)."""
    table = enumerate_S(N, 2)
    if N % 2 or not len(table):
        return PeriodSpaceBasis(N, 2, ())
    images = [swap_substitutions(EvenPolynomial(N, 2, {m: 1})) for m in table]
    monomials = sorted({k for img in images for k in img.terms}, reverse=True)
    # rows: output monomials; columns: unknown coefficients over S(N, 2)
    system = ExactMatrix.from_rows(
        [[img.coefficient(mono) for img in images] for mono in monomials], len(table)
    )
    kern = right_kernel(system)
    basis = tuple(EvenPolynomial(N, 2, dict(zip(table.entries, v))) for v in kern)
    return PeriodSpaceBasis(N, 2, basis)


@lru_cache(maxsize=None)
def w_basis(N: int, r: int) -> PeriodSpaceBasis:
    """Basis of W(N, r) as products w(x1, x2) * x3^a3 ... xr^ar."""
    if r < 2:
        raise ValueError("W(N, r) needs r >= 2")
    if r == 2:
        return w2_basis(N)
    basis = []
    for n in range(2, N, 2):
        tails = enumerate_S(N - n, r - 2)
        if not len(tails):
            continue
        for w in w2_basis(n):
            for tail in tails:
                basis.append(EvenPolynomial(N, r, {m + tail: c for m, c in w.coeffs.items()}))
    for p in basis:
        if not satisfies_period_relation(p):
            raise TheoremViolation("W(%d,%d) element violates the period relation: %r" % (N, r, p))
    return PeriodSpaceBasis(N, r, tuple(basis))


def _is_zero(v) -> bool:
    return not any(v)


def tasaka_image(N: int, r: int) -> list:
    """[pi(P) F(N, r) for P in W(N, r)], each checked to annihilate E(N, r)."""
    if r < 2:
        raise ValueError("need r >= 2")
    F, E = build_F(N, r), build_E(N, r)
    out = []
    for p in w_basis(N, r):
        v = vec_mat(pi(p), F)
        if not _is_zero(vec_mat(v, E)):
            raise TheoremViolation("pi(P) F(%d,%d) is not in the left kernel of E for P=%r" % (N, r, p))
        out.append(v)
    return out


def injectivity_report(N: int, r: int):
    """Compare rank of the Tasaka image with dim W and dim ker^T E."""
    image = tasaka_image(N, r)
    rk = span_rank(image)
    dim_w = len(w_basis(N, r))
    dim_kt = left_kernel(build_E(N, r)).dim
    observed = {"rank": rk, "dim_W": dim_w, "dim_kerT_E": dim_kt,
                "injective": rk == dim_w, "surjective": rk == dim_kt}
    return conjecture_record(
        "tasaka-map", rk == dim_w == dim_kt, N=N, r=r,
        expected={"rank": dim_w, "dim_kerT_E": dim_w}, observed=observed,
    )


def verify_baumard_schneps(N: int):
    """pi(W(N, 2)) equals the left kernel of E(N, 2)."""
    w = w2_basis(N)
    kt = left_kernel(build_E(N, 2))
    ok = span_equal(basis_of(w.vectors(), kt.ambient), kt)
    if not ok:
        raise TheoremViolation("pi(W(%d,2)) != ker^T E(%d,2): dims %d vs %d" % (N, N, w.dim, kt.dim))
    return theorem_record("baumard-schneps", ok, N=N, r=2, expected=kt.dim, observed=w.dim)


def verify_fnr_identity(N: int, r: int):
    """pi(-P) E^(r-1) == pi(P) F for every basis element P of W(N, r)."""
    if r < 3:
        raise ValueError("need r >= 3")
    Ej, F = build_Ej(N, r, r - 1), build_F(N, r)
    basis = w_basis(N, r)
    for p in basis:
        if vec_mat(pi(-p), Ej) != vec_mat(pi(p), F):
            raise TheoremViolation("F-identity fails at (%d,%d) for P=%r" % (N, r, p))
    return theorem_record("fnr", True, N=N, r=r, expected=basis.dim, observed=basis.dim)


def phi_restricted(q: EvenPolynomial, j: int) -> EvenPolynomial:
    """phi_j on W(N, r) for 2 <= j <= r - 2, checked to land back in W."""
    N, r = q.N, q.r
    if not 2 <= j <= r - 2:
        raise ValueError("restricted phi_j needs 2 <= j <= r - 2, got j=%r, r=%r" % (j, r))
    W = w_basis(N, r)
    if not W.contains(q):
        raise MembershipError("polynomial is not in W(%d, %d)" % (N, r))
    out = phi_j(q, j)
    if not W.contains(out):
        raise TheoremViolation("phi_%d maps W(%d,%d) outside itself" % (j, N, r))
    return out


def restricted_kernel_dims(N: int, r: int, j: int) -> tuple:
    """(dim ker of phi_j on W(N, r), sum_n dim W(N-n, r-j) dim ker E(n, j))."""
    W = w_basis(N, r)
    images = [pi(phi_restricted(p, j)) for p in W]
    observed = W.dim - span_rank(images)
    predicted = sum(
        len(w_basis(N - n, r - j)) * right_kernel(build_E(n, j)).dim
        for n in range(1, N)
        if count_S(n, j)
    )
    return observed, predicted


def phi_kernel_dims(N: int, r: int, j: int) -> tuple:
    """(dim ker phi_j on V(N, r), sum_n |S(N-n, r-j)| dim ker E(n, j)).

    The left side uses the polynomial map only, the right side the
    e-coefficient matrices only.
    """
    if not 1 <= j <= r - 1:
        raise ValueError("need 1 <= j <= r - 1")
    table = enumerate_S(N, r)
    images = [pi(phi_j(EvenPolynomial(N, r, {m: 1}), j)) for m in table]
    observed = len(table) - span_rank(images)
    predicted = sum(
        count_S(N - n, r - j) * right_kernel(build_E(n, j)).dim
        for n in range(1, N)
        if count_S(n, j)
    )
    return observed, predicted


def chain_image(N: int, r: int) -> list:
    """pi-vectors of phi_{r-1} o phi_{r-2}|W o ... o phi_2|W applied to W(N, r).

    Every output is checked to lie in ker phi_r and in the image of the
    unrestricted chain (row space of E^(2) ... E^(r-1)).
    """
    if r < 3:
        raise ValueError("need r >= 3")
    polys = list(w_basis(N, r))
    for j in range(2, r - 1):
        polys = [phi_restricted(p, j) for p in polys]
    polys = [phi_j(p, r - 1) for p in polys]
    vectors = [pi(p) for p in polys]
    E = build_E(N, r)
    prefix_rows = [list(row) for row in build_prefix(N, r).entries]
    for v in vectors:
        if not _is_zero(vec_mat(v, E)):
            raise TheoremViolation("chain image at (%d,%d) is not in ker phi_r" % (N, r))
        if not in_span(v, prefix_rows):
            raise TheoremViolation("chain image at (%d,%d) is not in Im of the full chain" % (N, r))
    return vectors


def chain_image_dim(N: int, r: int) -> int:
    """a(N, r) = dim Im(phi_{r-1} o phi_{r-2}|W o ... o phi_2|W)."""
    return span_rank(chain_image(N, r))


def glanois_report(N: int, r: int):
    """Restricted chain image vs ker phi_r intersected with the full chain image."""
    if r < 3:
        raise ValueError("need r >= 3")
    lhs = chain_image_dim(N, r)
    rhs = intersection_dim(build_prefix(N, r), build_E(N, r))
    return conjecture_record("glanois", lhs == rhs, N=N, r=r, expected=rhs, observed=lhs)
