"""Verification suites: parameter sweeps over the checks of each module.

Each suite expands a :class:`RunConfig` into independent tasks.  A task is
a module-level function plus arguments returning a list of
:class:`ReportRecord`, so tasks can be farmed out to a process pool; the
records are collected in task order, which keeps reports deterministic.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import TheoremViolation
from .indices import count_S, enumerate_S
from .linalg import intersection_dim, intersection_dim_direct, left_kernel, rank, right_kernel, vec_mat
from .matrices import build_C, build_E, build_Ej, build_prefix, verify_block_diagonal, verify_product_is_diag_C
from .period import (
    chain_image_dim,
    glanois_report,
    injectivity_report,
    phi_kernel_dims,
    restricted_kernel_dims,
    tasaka_image,
    verify_baumard_schneps,
    verify_fnr_identity,
    w_basis,
)
from .polynomials import EvenPolynomial, e_coefficient_formula, ihara_expansion, phi_j, pi
from .reports import ReportRecord, conjecture_record, theorem_record
from .series import compare_rank_to_conjecture, recursion_B, series_O, series_S, verify_series_identity

SUITES = (
    "oracle-e", "block-diag", "commute", "baumard-schneps", "tasaka-map",
    "fnr", "kernels", "glanois", "series-identity", "rank-vs-conjecture",
)

# (Nmax, rmax) used when the config leaves them unset
SUITE_DEFAULTS = {
    "oracle-e": (21, 4),
    "block-diag": (27, 5),
    "commute": (21, 4),
    "baumard-schneps": (28, 2),
    "tasaka-map": (25, 5),
    "fnr": (25, 5),
    "kernels": (21, 4),
    "glanois": (21, 4),
    "series-identity": (35, 6),
    "rank-vs-conjecture": (25, 4),
}


@dataclass
class RunConfig:
    Nmax: int | None = None
    rmax: int | None = None
    cache_dir: str | None = None
    fmt: str = "json"
    suites: tuple = ("all",)
    seed: int = 0
    samples: int = 100
    jobs: int = 1
    timings: bool = False
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.Nmax is not None and self.Nmax < 0:
            raise ValueError("Nmax must be >= 0")
        if self.rmax is not None and self.rmax < 1:
            raise ValueError("rmax must be >= 1")

    def bounds(self, suite: str):
        N0, r0 = SUITE_DEFAULTS[suite]
        return (N0 if self.Nmax is None else self.Nmax, r0 if self.rmax is None else self.rmax)


# ---------------------------------------------------------------------------
# tasks


def _compositions(N: int, r: int):
    """All r-tuples of positive integers summing to N."""
    if r == 1:
        if N >= 1:
            yield (N,)
        return
    for a in range(1, N - r + 2):
        for rest in _compositions(N - a, r - 1):
            yield (a,) + rest


def task_oracle_e(N, r):
    mismatches = []
    pairs = 0
    ns = list(_compositions(N, r))
    for m in enumerate_S(N, r):
        expansion = ihara_expansion(m)
        for n in ns:
            pairs += 1
            lhs = e_coefficient_formula(m, n)
            rhs = expansion.coefficient(tuple(k - 1 for k in n))
            if lhs != rhs:
                mismatches.append([list(m), list(n), lhs, rhs])
    return [theorem_record(
        "oracle-e", not mismatches, N=N, r=r, expected=0, observed=len(mismatches),
        detail={"pairs": pairs, "first_mismatches": mismatches[:3]} if mismatches else {"pairs": pairs},
    )]


def task_block_diag(N, r):
    out = [verify_block_diagonal(N, r, j) for j in range(2, r)]
    out.append(verify_product_is_diag_C(N, r))
    return out


def random_even_poly(rng: random.Random, N: int, r: int) -> EvenPolynomial:
    coeffs = {}
    for m in enumerate_S(N, r):
        c = rng.randint(-6, 6)
        if rng.random() < 0.25:
            c = Fraction(c, rng.randint(1, 5))
        coeffs[m] = c
    return EvenPolynomial(N, r, coeffs)


def task_commute(N, r, j, samples, seed):
    rng = random.Random("%d:%d:%d:%d" % (seed, N, r, j))
    E = build_Ej(N, r, j) if j >= 2 else None
    bad = 0
    for _ in range(samples):
        q = random_even_poly(rng, N, r)
        lhs = pi(phi_j(q, j))
        rhs = vec_mat(pi(q), E) if E is not None else pi(q)
        if lhs != rhs:
            bad += 1
    return [theorem_record(
        "commute", bad == 0, N=N, r=r, j=j, expected=0, observed=bad,
        detail={"samples": samples}, seed=seed,
    )]


def task_baumard_schneps(N):
    return [verify_baumard_schneps(N)]


def task_tasaka(N, r):
    image = tasaka_image(N, r)
    wd = theorem_record("tasaka-well-defined", True, N=N, r=r, expected=len(image), observed=len(image))
    return [wd, injectivity_report(N, r)]


def task_fnr(N, r):
    return [verify_fnr_identity(N, r)]


def task_w_dimension(N, r, expected):
    got = len(w_basis(N, r))
    return [theorem_record("w-dimension", got == expected, N=N, r=r, expected=expected, observed=got)]


def task_kernels(N, r):
    out = []
    for j in range(1, r):
        obs, pred = phi_kernel_dims(N, r, j)
        out.append(theorem_record("ker-phi", obs == pred, N=N, r=r, j=j, expected=pred, observed=obs))
    for j in range(2, r - 1):
        obs, pred = restricted_kernel_dims(N, r, j)
        out.append(theorem_record("ker-phi-restricted", obs == pred, N=N, r=r, j=j,
                                  expected=pred, observed=obs))
    if r >= 3:
        prefix, E = build_prefix(N, r), build_E(N, r)
        size = count_S(N, r)
        ker_c = size - rank(build_C(N, r))
        split = left_kernel(prefix).dim + intersection_dim(prefix, E)
        out.append(theorem_record("ker-C-splitting", ker_c == split, N=N, r=r,
                                  expected=ker_c, observed=split))
        direct = intersection_dim_direct(prefix, E)
        out.append(theorem_record("intersection-two-methods", direct == intersection_dim(prefix, E),
                                  N=N, r=r, expected=direct, observed=intersection_dim(prefix, E)))
        block_sum = sum(right_kernel(build_C(k, r - 1)).dim for k in range(3 * r - 3, N - 2))
        ker_prefix = right_kernel(prefix).dim
        out.append(theorem_record("ker-prefix-block-sum", ker_prefix == block_sum, N=N, r=r,
                                  expected=block_sum, observed=ker_prefix))
    return out


def task_glanois(N, r, b_coeff):
    out = [glanois_report(N, r)]
    a = chain_image_dim(N, r)
    out.append(theorem_record("chain-inclusion", True, N=N, r=r, expected=a, observed=a))
    out.append(conjecture_record("chain-vs-B-recursion", a == b_coeff, N=N, r=r,
                                 expected=b_coeff, observed=a))
    return out


def task_series_identity(bound, ybound):
    return [verify_series_identity(bound, ybound)]


def task_rank_vs_conjecture(Nmax, rmax):
    return compare_rank_to_conjecture(Nmax, rmax)[1]


# ---------------------------------------------------------------------------
# suite expansion and running


def suite_tasks(suite: str, config: RunConfig) -> list:
    if suite not in SUITES:
        raise ValueError("unknown suite %r (choose from %s or all)" % (suite, ", ".join(SUITES)))
    Nmax, rmax = config.bounds(suite)
    if suite == "oracle-e":
        return [(task_oracle_e, (N, r)) for r in range(2, rmax + 1) for N in range(Nmax + 1)
                if count_S(N, r)]
    if suite == "block-diag":
        return [(task_block_diag, (N, r)) for r in range(3, rmax + 1) for N in range(Nmax + 1)]
    if suite == "commute":
        return [(task_commute, (N, r, j, config.samples, config.seed))
                for r in range(1, rmax + 1) for j in range(1, r + 1) for N in range(Nmax + 1)
                if count_S(N, r)]
    if suite == "baumard-schneps":
        return [(task_baumard_schneps, (N,)) for N in range(2, Nmax + 1, 2)]
    if suite == "tasaka-map":
        return [(task_tasaka, (N, r)) for r in range(2, rmax + 1) for N in range(Nmax + 1)]
    if suite == "fnr":
        return [(task_fnr, (N, r)) for r in range(3, rmax + 1) for N in range(Nmax + 1)]
    if suite == "kernels":
        tasks = []
        for r in range(2, rmax + 1):
            series = series_O(Nmax) ** (r - 2) * series_S(Nmax)
            tasks += [(task_w_dimension, (N, r, series[N])) for N in range(Nmax + 1)]
            tasks += [(task_kernels, (N, r)) for N in range(Nmax + 1) if count_S(N, r)]
        return tasks
    if suite == "glanois":
        tasks = []
        for r in range(3, rmax + 1):
            B = recursion_B(r, Nmax)
            tasks += [(task_glanois, (N, r, B[N])) for N in range(Nmax + 1)]
        return tasks
    if suite == "series-identity":
        return [(task_series_identity, (Nmax, rmax))]
    if suite == "rank-vs-conjecture":
        return [(task_rank_vs_conjecture, (Nmax, rmax))]


def _run_task(task):
    suite, func, args = task
    start = time.perf_counter()
    try:
        records = func(*args)
    except TheoremViolation as exc:
        keys = ("N", "r", "j") if suite == "commute" else ("N", "r")
        params = {} if suite in ("series-identity", "rank-vs-conjecture") else dict(zip(keys, args))
        records = [ReportRecord(suite, status="violation", theorem=True, detail=str(exc), **params)]
    elapsed = time.perf_counter() - start
    for rec in records:
        rec.elapsed = elapsed / max(len(records), 1)
    return records


def run_suites(config: RunConfig) -> list:
    """Run the configured suites and return the flat list of records."""
    names = SUITES if "all" in config.suites else tuple(config.suites)
    tasks = [(name, func, args) for name in names for func, args in suite_tasks(name, config)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    return [rec for chunk in chunks for rec in chunk]
