"""Reproducible experiments: bound-versus-solver tables and bound verification harnesses.

Every function returns a :class:`CsvTable`; randomness comes only from
seeded ``numpy`` generators, so equal arguments give identical tables.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .approx import SolveResult, SolverConfig, solve_sweep
from .blaschke import BlaschkeProduct, taylor_coeffs_series, truncation_index
from .bounds import (
    alpha0,
    beta_star,
    bound_at_alpha,
    coeff_bound_blaschke,
    coeff_tail_bound,
    delay_bound,
    optimize_alpha_beta,
    product_coeff_bound,
    s_star,
)
from .errors import DomainError
from .table import CsvTable

__all__ = [
    "ExperimentSpec",
    "blaschke_family",
    "random_blaschke",
    "best_of_modes",
    "run_delay_figure",
    "run_blaschke_figure",
    "run_alpha_scan",
    "run_beta_scan",
    "run_coeff_verify",
    "run_product_verify",
    "DEFAULT_BETA_PAIRS",
]

# complex search up to this degree, conjugate-symmetric search throughout
COMPLEX_UP_TO = 3
DEFAULT_BETA_PAIRS = (
    (0.1, 0.5), (0.5, 0.25), (0.5, 0.5), (0.5, 0.9), (0.8, 0.5), (0.9, 0.5), (0.95, 0.9),
)


@dataclass(frozen=True)
class ExperimentSpec:
    """Settings of one experiment run as driven by the command line."""

    kind: str
    N: int = 100
    n_range: tuple = (1, 8)
    lam: float = 0.5
    seed: int = 0
    output_dir: str = "."
    emit_svg: bool = False

    KINDS = ("delay_figure", "blaschke_figure", "alpha_scan", "beta_scan",
             "coeff_verify", "single_solve", "single_bound")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise DomainError(f"unknown experiment kind {self.kind!r}")
        lo, hi = self.n_range
        if lo < 0 or hi < lo:
            raise DomainError(f"bad degree range {self.n_range!r}")
        if not 0.0 < self.lam < 1.0:
            raise DomainError("lambda must lie in (0, 1)")


def blaschke_family(N: int, lam: float) -> dict[str, BlaschkeProduct]:
    """The three degree-N test products sharing the maximal zero modulus ``lam``."""
    roots = lam * np.exp(2j * np.pi * np.arange(N) / N)
    return {
        "B1": BlaschkeProduct(np.full(N, lam)),
        "B2": BlaschkeProduct(np.concatenate([np.zeros(N - 1), [lam]])),
        "B3": BlaschkeProduct(roots),
    }


def random_blaschke(rng: np.random.Generator, degree: int, lam_max: float) -> BlaschkeProduct:
    """Zeros with radius squared uniform on ``(0, lam_max**2)`` and uniform angle."""
    rad = np.sqrt(rng.uniform(0.0, lam_max * lam_max, degree))
    return BlaschkeProduct(rad * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, degree)))


def best_of_modes(f: BlaschkeProduct, n_max: int, cfg: SolverConfig) -> list[SolveResult]:
    """Per degree, the better of a conjugate-symmetric sweep and (for small n) a complex one.

    The complex search runs only while ``n <= COMPLEX_UP_TO``; beyond that the
    symmetric search alone is used, which is far cheaper.
    """
    real = solve_sweep(f, n_max, replace(cfg, real_symmetric=True))
    k = min(n_max, COMPLEX_UP_TO)
    cplx = solve_sweep(f, k, replace(cfg, real_symmetric=False)) if k >= 1 else []
    out = []
    for i, r in enumerate(real):
        if i < len(cplx) and cplx[i].error < r.error:
            r = cplx[i]
        out.append(r)
    return out


def _degrees(n_range: Iterable[int], N: int) -> list[int]:
    ns = sorted(set(int(n) for n in n_range))
    if not ns or ns[0] < 1 or ns[-1] >= N:
        raise DomainError(f"degrees must lie in [1, {N - 1}]")
    return ns


def run_delay_figure(
    N: int, n_range: Iterable[int], cfg: SolverConfig = SolverConfig(), *, results: list | None = None
) -> CsvTable:
    """Approximation of ``z**N`` against ``sqrt(1 - n/N)``.

    Columns ``n, bound, solver_error, one_minus_bound, one_minus_error``.
    Solver results are appended to ``results`` when given.
    """
    ns = _degrees(n_range, N)
    f = BlaschkeProduct(np.zeros(N))
    sols = best_of_modes(f, ns[-1], cfg)
    rows = []
    for n in ns:
        r = sols[n - 1]
        if results is not None:
            results.append(r)
        b = delay_bound(n, N)
        rows.append((n, b, r.error, 1.0 - b, 1.0 - r.error))
    return CsvTable(("n", "bound", "solver_error", "one_minus_bound", "one_minus_error"), rows)


def run_blaschke_figure(
    N: int, lam: float, n_range: Iterable[int], cfg: SolverConfig = SolverConfig(),
    *, results: dict | None = None,
) -> CsvTable:
    """Approximation of B1, B2, B3 against the optimized general bound.

    Columns ``n, thm3_bound, error_B1, error_B2, error_B3``.
    """
    ns = _degrees(n_range, N)
    fam = blaschke_family(N, lam)
    sols = {}
    for name, f in fam.items():
        sols[name] = best_of_modes(f, ns[-1], cfg)
        if results is not None:
            results[name] = [sols[name][n - 1] for n in ns]
    rows = []
    for n in ns:
        bound = optimize_alpha_beta(N, n, lam).value
        rows.append((n, bound, *(sols[k][n - 1].error for k in ("B1", "B2", "B3"))))
    return CsvTable(("n", "thm3_bound", "error_B1", "error_B2", "error_B3"), rows)


def run_alpha_scan(N: int, n: int, lam: float, grid: int = 400, *, breakpoint_floor: float = 0.5) -> CsvTable:
    """General bound (``beta`` optimized) as a function of ``alpha`` on ``(0, alpha0)``.

    ``grid`` uniform midpoints, plus the pair ``N/m -+ 1e-9`` around every
    breakpoint ``N/m`` in ``[breakpoint_floor * alpha0, alpha0)``. Columns
    ``alpha, bound_value, floor_N_over_alpha``, sorted by ``alpha``.
    """
    if grid < 100:
        raise DomainError("grid must be >= 100")
    a0 = alpha0(lam)
    alphas = {a0 * (i + 0.5) / grid for i in range(grid)}
    m = math.floor(N / a0) + 1
    while N / m >= breakpoint_floor * a0:
        for a in (N / m - 1e-9, N / m + 1e-9):
            if 0.0 < a < a0:
                alphas.add(a)
        m += 1
    rows = []
    for a in sorted(alphas):
        rep = bound_at_alpha(N, n, lam, a)
        rows.append((a, rep.value, math.floor(N / a)))
    return CsvTable(("alpha", "bound_value", "floor_N_over_alpha"), rows)


def run_beta_scan(pairs: Sequence = DEFAULT_BETA_PAIRS, n_range: Iterable[int] = range(0, 101)) -> CsvTable:
    """``beta*(n; x)`` with ``x = s*(lam, ratio * alpha0)**-2``.

    Columns ``lambda, alpha_ratio, n, x, beta_star``.
    """
    ns = sorted(set(int(n) for n in n_range))
    rows = []
    for lam, ratio in pairs:
        if not 0.0 < ratio < 1.0:
            raise DomainError("alpha ratio must lie in (0, 1)")
        x = s_star(lam, ratio * alpha0(lam)) ** -2
        for n in ns:
            rows.append((float(lam), float(ratio), n, x, beta_star(n, x)))
    return CsvTable(("lambda", "alpha_ratio", "n", "x", "beta_star"), rows)


def run_coeff_verify(
    count: int = 100, max_degree: int = 10, lambda_max: float = 0.8, seed: int = 0,
    *, alpha_ratio: float = 0.5, span: int = 200,
) -> CsvTable:
    """Random products against the pointwise and tail coefficient bounds.

    For each sample of degree ``n`` and ``k0 = ceil(n/alpha)`` with
    ``alpha = alpha_ratio * alpha0(lambda_max)``: the largest
    ``|B^(k)| / bound(k)`` over ``k0 <= k <= k0 + span`` and the ratio of
    ``sum_{k >= k0} |B^(k)|**2`` to the tail bound. Coefficients come from the
    untruncated series product. The tail sum stops where the remaining
    certified mass is below ``1e-8`` of the tail bound.
    """
    if count < 1 or max_degree < 1 or not 0.0 < lambda_max < 1.0:
        raise DomainError("need count >= 1, max_degree >= 1, 0 < lambda_max < 1")
    rng = np.random.default_rng(seed)
    alpha = alpha_ratio * alpha0(lambda_max)
    s = s_star(lambda_max, alpha)
    rows = []
    for i in range(count):
        n = int(rng.integers(1, max_degree + 1))
        b = random_blaschke(rng, n, lambda_max)
        k0 = math.ceil(n / alpha)
        K = max(k0 + span, k0 + math.ceil(math.log(1e8) / (2.0 * math.log(s))))
        a = np.abs(taylor_coeffs_series(b, K, cutoff=0.0).coeffs)
        ks = np.arange(k0, k0 + span + 1)
        bounds = np.array([coeff_bound_blaschke(n, lambda_max, alpha, int(k)) for k in ks])
        ratio = float(np.max(a[ks] / bounds))
        tail = float(np.sum(a[k0:] ** 2))
        tail_ratio = tail / coeff_tail_bound(n, lambda_max, alpha, k0)
        rows.append((i, n, lambda_max, alpha, k0, ratio, tail_ratio))
    return CsvTable(("sample", "degree", "lambda", "alpha", "k0", "max_coeff_ratio", "tail_ratio"), rows)


def _negative_coeffs(f: BlaschkeProduct, b: BlaschkeProduct, k_lo: int, k_hi: int) -> np.ndarray:
    """``|a_k|`` for ``k_lo <= k <= k_hi < 0``, ``a`` the coefficients of ``conj(f) b`` on the circle.

    Exact convolution ``a_k = sum_{m>=0} conj(f^(m - k)) b^(m)``, with ``b``
    truncated where its certified remaining mass is below ``1e-40``.
    """
    Mb = truncation_index(b, 1e-40)
    bb = taylor_coeffs_series(b, Mb, cutoff=0.0).coeffs
    ff = taylor_coeffs_series(f, Mb - k_lo, cutoff=0.0).coeffs
    out = np.empty(k_hi - k_lo + 1)
    for j, k in enumerate(range(k_lo, k_hi + 1)):
        out[j] = abs(np.dot(np.conj(ff[-k: -k + Mb + 1]), bb))
    return out


def run_product_verify(
    N: int = 20, lam: float = 0.5, n: int = 3, count: int = 20, seed: int = 0,
    *, betas: Sequence[float] = (0.0, 0.5, 1.0), alpha_ratio: float = 0.5, span: int = 200,
    b_radius_sq: float = 0.9,
) -> CsvTable:
    """Coefficients of ``f^sharp b_n`` for ``f = B2`` against the product coefficient bound.

    Random ``b_n`` have zeros with radius squared uniform on
    ``(0, b_radius_sq)``. For each sample and ``beta`` the largest ratio
    ``|a_k| / bound(k)`` over ``-(k1 + span) <= k <= -k1``,
    ``k1 = ceil(N/alpha)``, is reported, from the exact convolution and from
    a boundary DFT. The DFT ratio only covers indices whose bound exceeds
    ``1e-13``, since DFT values carry absolute rounding near ``1e-16``.
    """
    f = blaschke_family(N, lam)["B2"]
    alpha = alpha_ratio * alpha0(lam)
    k1 = math.ceil(N / alpha)
    ks = np.arange(-(k1 + span), -k1 + 1)
    rng = np.random.default_rng(seed)
    rows = []
    for i in range(count):
        rad = np.sqrt(rng.uniform(0.0, b_radius_sq, n))
        b = BlaschkeProduct(rad * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n)))
        exact = _negative_coeffs(f, b, int(ks[0]), int(ks[-1]))
        M = 1 << max(12, math.ceil(math.log2(4 * (k1 + span + truncation_index(b, 1e-32)))))
        z = np.exp(2j * np.pi * np.arange(M) / M)
        dft = np.abs(np.fft.fft(b.evaluate(z) / f.evaluate(z)) / M)[ks % M]
        for beta in betas:
            bounds = np.array([product_coeff_bound(N, n, lam, alpha, beta, int(k)) for k in ks])
            sel = bounds > 1e-13
            dft_ratio = float(np.max(dft[sel] / bounds[sel])) if np.any(sel) else 0.0
            rows.append((i, float(beta), int(ks.size), float(np.max(exact / bounds)), int(np.sum(sel)), dft_ratio))
    return CsvTable(("sample", "beta", "k_checked", "max_ratio_exact", "dft_k_checked", "max_ratio_dft"), rows)
