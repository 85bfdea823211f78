"""Truncated integer power series and the generating functions built from them.

``O``, ``E``, ``S`` are the odd, even and cusp-form dimension series;
``T_r`` is the kernel series of C(N, r) predicted by the recursion, and the
conjectured rank series is the y^r coefficient of 1 / (1 - O y + S y^2).
"""
from __future__ import annotations

from math import comb

from .errors import TheoremViolation
from .indices import count_S
from .linalg import rank
from .matrices import build_C
from .period import injectivity_report
from .reports import conjecture_record, theorem_record


class TruncatedSeries:
    """Integer power series known exactly up to x^bound (inclusive)."""

    __slots__ = ("bound", "coeffs")

    def __init__(self, coeffs, bound: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if bound is None:
            bound = len(coeffs) - 1
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        coeffs = coeffs[: bound + 1]
        self.coeffs = coeffs + [0] * (bound + 1 - len(coeffs))
        self.bound = bound

    @classmethod
    def zero(cls, bound: int):
        return cls([], bound)

    @classmethod
    def one(cls, bound: int):
        return cls([1], bound)

    @classmethod
    def monomial(cls, k: int, bound: int, c: int = 1):
        out = [0] * (bound + 1)
        if k <= bound:
            out[k] = c
        return cls(out, bound)

    def __getitem__(self, k: int) -> int:
        if not 0 <= k <= self.bound:
            raise IndexError("coefficient x^%d beyond truncation bound %d" % (k, self.bound))
        return self.coeffs[k]

    def __repr__(self):
        terms = ["%d*x^%d" % (c, k) for k, c in enumerate(self.coeffs) if c]
        return "TruncatedSeries(%s + O(x^%d))" % (" + ".join(terms) or "0", self.bound + 1)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.bound == other.bound and self.coeffs == other.coeffs

    def _bound_with(self, other) -> int:
        return min(self.bound, other.bound)

    def __add__(self, other):
        b = self._bound_with(other)
        return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(b + 1)], b)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([c * other for c in self.coeffs], self.bound)
        b = self._bound_with(other)
        out = [0] * (b + 1)
        for i, a in enumerate(self.coeffs[: b + 1]):
            if a:
                for k, c in enumerate(other.coeffs[: b + 1 - i]):
                    if c:
                        out[i + k] += a * c
        return TruncatedSeries(out, b)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported; use inverse()")
        out = TruncatedSeries.one(self.bound)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ZeroDivisionError("constant term %d is not a unit in Z" % c0)
        out = [0] * (self.bound + 1)
        out[0] = c0
        for k in range(1, self.bound + 1):
            acc = sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1))
            out[k] = -acc * c0
        return TruncatedSeries(out, self.bound)


def series_O(bound: int) -> TruncatedSeries:
    """x^3 / (1 - x^2)."""
    return TruncatedSeries([1 if k >= 3 and k % 2 else 0 for k in range(bound + 1)], bound)


def series_E(bound: int) -> TruncatedSeries:
    """x^2 / (1 - x^2)."""
    return TruncatedSeries([1 if k >= 2 and k % 2 == 0 else 0 for k in range(bound + 1)], bound)


def series_S(bound: int) -> TruncatedSeries:
    """x^12 / ((1 - x^4)(1 - x^6)), expanded through geometric inverses."""
    one = TruncatedSeries.one(bound)
    den = (one - TruncatedSeries.monomial(4, bound)) * (one - TruncatedSeries.monomial(6, bound))
    return TruncatedSeries.monomial(12, bound) * den.inverse()


def conjectured_rank_series(r: int, bound: int) -> TruncatedSeries:
    """y^r coefficient of 1 / (1 - O y + S y^2).

    Expands sum_k (O y - S y^2)^k binomially: the y^r part collects
    C(r - i, i) (-1)^i O^(r - 2i) S^i.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    O, S = series_O(bound), series_S(bound)
    out = TruncatedSeries.zero(bound)
    for i in range(r // 2 + 1):
        out = out + (O ** (r - 2 * i)) * (S ** i) * ((-1) ** i * comb(r - i, i))
    return out


def recursion_T(r: int, bound: int, computed_T: dict | None = None) -> TruncatedSeries:
    """T_r from T_r = O T_{r-1} - S T_{r-2} + O^(r-2) S with T_0 = T_1 = 0.

    Entries of ``computed_T`` (depth -> series) replace the recursion's own
    values for lower depths, so empirically computed kernel series can be
    fed back in.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    computed_T = computed_T or {}
    O, S = series_O(bound), series_S(bound)
    T = {0: TruncatedSeries.zero(bound), 1: TruncatedSeries.zero(bound)}
    T.update({d: s for d, s in computed_T.items() if d < r})
    for d in range(2, r + 1):
        if d in T:
            continue
        T[d] = O * T[d - 1] - S * T[d - 2] + (O ** (d - 2)) * S
    return T[r]


def recursion_B(r: int, bound: int) -> TruncatedSeries:
    """B_r = O^(r-2) S - sum_{j=2}^{r-2} O^(r-j-2) S B_j, with B_2 = S."""
    if r < 2:
        raise ValueError("B_r is defined for r >= 2")
    O, S = series_O(bound), series_S(bound)
    B = {2: S}
    for d in range(3, r + 1):
        acc = (O ** (d - 2)) * S
        for j in range(2, d - 1):
            acc = acc - (O ** (d - j - 2)) * S * B[j]
        B[d] = acc
    return B[r]


def residual_series(r: int, bound: int) -> TruncatedSeries:
    """R_r = O^r - T_r."""
    return series_O(bound) ** r - recursion_T(r, bound)


class BivariateSeries:
    """Series in x and y: a list of x-series indexed by y-degree."""

    def __init__(self, parts, ybound: int):
        parts = list(parts)[: ybound + 1]
        if not parts:
            raise ValueError("need at least one x-series")
        xb = parts[0].bound
        while len(parts) <= ybound:
            parts.append(TruncatedSeries.zero(xb))
        self.parts = parts
        self.ybound = ybound

    def __getitem__(self, d):
        return self.parts[d]

    def __mul__(self, other):
        yb = min(self.ybound, other.ybound)
        xb = min(self.parts[0].bound, other.parts[0].bound)
        out = [TruncatedSeries.zero(xb) for _ in range(yb + 1)]
        for a in range(yb + 1):
            for b in range(yb + 1 - a):
                out[a + b] = out[a + b] + self.parts[a] * other.parts[b]
        return BivariateSeries(out, yb)

    def is_one(self) -> bool:
        return all(
            c == (1 if (d, k) == (0, 0) else 0)
            for d, part in enumerate(self.parts)
            for k, c in enumerate(part.coeffs)
        )


def verify_series_identity(bound: int = 35, ybound: int = 6):
    """(1 - O y + S y^2) * sum_r R_r y^r == 1 up to x^bound, y^ybound."""
    O, S = series_O(bound), series_S(bound)
    one = TruncatedSeries.one(bound)
    left = BivariateSeries([one, -O, S], ybound)
    right = BivariateSeries([residual_series(r, bound) for r in range(ybound + 1)], ybound)
    product = left * right
    ok = product.is_one()
    if not ok:
        bad = [
            (d, k, c) for d, part in enumerate(product.parts) for k, c in enumerate(part.coeffs)
            if c != (1 if (d, k) == (0, 0) else 0)
        ]
        raise TheoremViolation("series identity fails at (y-degree, x-degree, coeff) %r" % (bad[:5],))
    return theorem_record(
        "series-identity", ok, expected=1, observed=1,
        detail={"x_bound": bound, "y_bound": ybound},
    )


# ---------------------------------------------------------------------------
# comparison with computed ranks

TABLE_HEADER = ("N", "r", "size", "rank", "dim_ker", "conjectured_rank", "status")


def compare_rank_to_conjecture(Nmax: int, rmax: int, max_size: int | None = None):
    """Exact rank C(N, r) against the conjectured series, for 1 <= N, r.

    Returns ``(rows, records)``: table rows with status ``match``,
    ``mismatch`` or ``not-computed`` (index set larger than ``max_size``),
    and report records.  A rank mismatch is a finding; the lower bound
    dim ker C >= T_r[N] is theorem-backed for r = 2 and, where injectivity
    of the Tasaka map is observed at (N, r), for r = 3, 4.
    """
    bound = max(Nmax, 0)
    rows, records = [], []
    for N in range(1, Nmax + 1):
        for r in range(1, rmax + 1):
            size = count_S(N, r)
            conj = conjectured_rank_series(r, bound)[N]
            if max_size is not None and size > max_size:
                rows.append((N, r, size, None, None, conj, "not-computed"))
                continue
            rk = rank(build_C(N, r))
            ker = size - rk
            status = "match" if rk == conj else "mismatch"
            rows.append((N, r, size, rk, ker, conj, status))
            provenance = {"matrix": "C", "size": size}
            records.append(conjecture_record(
                "rank-vs-conjecture", rk == conj, N=N, r=r,
                expected=conj, observed=rk, detail=provenance,
            ))
            if 2 <= r <= 5 and size:
                lower = recursion_T(r, bound)[N]
                holds = ker >= lower
                if r == 2:
                    backed = True
                elif r in (3, 4):
                    backed = injectivity_report(N, r).observed["injective"]
                else:
                    backed = False
                make = theorem_record if backed else conjecture_record
                records.append(make(
                    "kernel-lower-bound", holds, N=N, r=r, expected=lower, observed=ker,
                    detail={"relation": ">=", "conditional_on_injectivity": r != 2},
                ))
    return rows, records
