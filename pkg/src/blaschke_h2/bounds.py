"""Lower bounds for H^2 rational approximation of Blaschke products.

Everything here is closed-form arithmetic on a handful of scalars:

* ``delay_bound``: the bound ``sqrt(1 - n/N)`` for approximating ``z**N``.
* ``general_bound``: the bound for a degree-``N`` Blaschke product whose
  zeros have modulus at most ``lam``, for one choice of the splitting
  parameter ``alpha`` and weight exponent ``beta``.
* ``optimize_alpha_beta``: the same bound maximised over both parameters.
* Fourier coefficient estimates for finite Blaschke products
  (``coeff_bound_blaschke``, ``coeff_tail_bound``) and for products
  ``f^sharp * b_n`` (``product_coeff_bound``).

Large powers such as ``rho**(2N)`` overflow doubles long before the bound
itself becomes uninteresting, so the composite terms are assembled as
logarithms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError

__all__ = [
    "BoundParams",
    "BoundReport",
    "alpha0",
    "delay_bound",
    "s_star",
    "radial_factor",
    "polylog",
    "series_s",
    "k_beta",
    "phi",
    "beta_star",
    "general_bound",
    "bound_at_alpha",
    "optimize_alpha_beta",
    "coeff_bound_blaschke",
    "coeff_tail_bound",
    "blaschke_tail_bound",
    "product_coeff_bound",
    "floor_ratio",
]

SERIES_TAIL = 1e-15
_MAX_TERMS = 50_000_000
_CHUNK = 1 << 20
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _check_lambda(lam: float) -> None:
    if not (0.0 < lam < 1.0):
        raise DomainError(f"lambda must lie in (0, 1), got {lam!r}")


def _check_x(x: float) -> None:
    if not (0.0 < x < 1.0):
        raise DomainError(f"x must lie in (0, 1), got {x!r}")


def _check_beta(beta: float) -> None:
    if not (0.0 <= beta <= 1.0):
        raise DomainError(f"beta must lie in [0, 1], got {beta!r}")


def alpha0(lam: float) -> float:
    """Upper end ``(1 - lam) / (1 + lam)`` of the admissible alpha range."""
    _check_lambda(lam)
    return (1.0 - lam) / (1.0 + lam)


def _check_alpha(lam: float, alpha: float) -> None:
    a0 = alpha0(lam)
    if not (0.0 < alpha < a0):
        raise DomainError(f"alpha must lie in (0, {a0!r}) for lambda={lam!r}, got {alpha!r}")


def floor_ratio(N: int, alpha: float) -> int:
    """Exact ``floor(N / alpha)`` for the float ``alpha`` (no rounding at breakpoints)."""
    return math.floor(Fraction(N) / Fraction(alpha))


def delay_bound(n: int, N: int) -> float:
    """Lower bound ``sqrt(1 - n/N)`` on the distance from ``z**N`` to R_{n,n}."""
    if n < 0 or N <= 0 or n >= N:
        raise DomainError(f"need 0 <= n < N, got n={n}, N={N}")
    return math.sqrt(1.0 - n / N)


def s_star(lam: float, alpha: float) -> float:
    """Contour radius optimising the coefficient decay estimate.

    This is the larger root ``bq + sqrt(bq**2 - 1)`` of ``s**2 - 2 bq s + 1``,
    where ``bq = (1/alpha - 1 + (1/alpha + 1) lam**2) / (2 lam / alpha)``.
    The result lies in ``(1, 1/lam)``.
    """
    _check_alpha(lam, alpha)
    a = 1.0 / alpha
    bq = (a - 1.0 + (a + 1.0) * lam * lam) / (2.0 * lam * a)
    # bq * (1 + sqrt(1 - bq**-2)) stays finite when lam is tiny
    return bq * (1.0 + math.sqrt(max(0.0, (1.0 - 1.0 / bq) * (1.0 + 1.0 / bq))))


def radial_factor(lam: float, s: float) -> float:
    """``b_lam(s) = (s - lam) / (1 - lam s)``, the max of ``|b_w|`` on ``|z| = s > 1``."""
    return (s - lam) / (1.0 - lam * s)


def _n_terms(x: float) -> int:
    # smallest L with x**(L+1) / (1 - x) < SERIES_TAIL
    L = math.ceil(math.log(SERIES_TAIL * (1.0 - x)) / math.log(x))
    L = max(L, 1)
    if L > _MAX_TERMS:
        raise DomainError(f"x={x!r} too close to 1 for series summation")
    return L


def polylog(beta: float, x: float) -> float:
    """Polylogarithm ``Li_beta(x) = sum_{l>=1} x**l / l**beta`` for ``0 < x < 1``."""
    _check_beta(beta)
    _check_x(x)
    L = _n_terms(x)
    log_x = math.log(x)
    total = 0.0
    for lo in range(1, L + 1, _CHUNK):
        l = np.arange(lo, min(L + 1, lo + _CHUNK), dtype=float)
        total += float(np.sum(np.exp(l * log_x - beta * np.log(l))))
    return total


def series_s(beta: float, x: float) -> float:
    """``S_beta(x) = sum_{m>=0} x**m / (m+1)**beta`` (equal to ``Li_beta(x) / x``)."""
    _check_beta(beta)
    _check_x(x)
    L = _n_terms(x)
    total = 0.0
    log_x = math.log(x)
    for lo in range(0, L + 1, _CHUNK):
        m = np.arange(lo, min(L + 1, lo + _CHUNK), dtype=float)
        total += float(np.sum(np.exp(m * log_x - beta * np.log1p(m))))
    return total


def k_beta(n: int, x: float, beta: float) -> float:
    """``K_beta(n; x) = (n+1)**(beta/2) * sqrt(S_beta(x))``."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return (n + 1.0) ** (beta / 2.0) * math.sqrt(series_s(beta, x))


@lru_cache(maxsize=256)
def _s_terms(x: float) -> tuple[np.ndarray, np.ndarray]:
    L = _n_terms(x)
    m = np.arange(L + 1, dtype=float)
    log_w = m * math.log(x)
    lm = np.log1p(m)
    log_w.setflags(write=False)
    lm.setflags(write=False)
    return log_w, lm


def _phi_and_slope(n: int, x: float, beta: float) -> tuple[float, float]:
    log_w, lm = _s_terms(x)
    t = np.exp(log_w - beta * lm)
    s = float(np.sum(t))
    mean_log = float(np.dot(t, lm)) / s
    ln1 = math.log(n + 1.0)
    return beta * ln1 + math.log(s), ln1 - mean_log


def phi(n: int, x: float, beta: float) -> float:
    """``log K_beta(n; x)**2 = beta log(n+1) + log S_beta(x)``; strictly convex in beta."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    _check_x(x)
    _check_beta(beta)
    return _phi_and_slope(n, x, beta)[0]


def _golden_min(func, lo: float, hi: float, tol: float):
    """Golden-section search for a minimum of a unimodal ``func`` on ``[lo, hi]``.

    Returns ``(argmin, value)`` over every point evaluated.
    """
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = func(c), func(d)
    best = min((fc, c), (fd, d))
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = func(c)
            best = min(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = func(d)
            best = min(best, (fd, d))
    return best[1], best[0]


def beta_star(n: int, x: float, tol: float = 1e-6) -> float:
    """Minimiser over ``[0, 1]`` of ``beta -> K_beta(n; x)``.

    Since ``phi`` is convex, its slope at the endpoints decides whether the
    minimiser is interior; otherwise a golden-section search is run to
    absolute tolerance ``tol``.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    _check_x(x)
    if _phi_and_slope(n, x, 0.0)[1] >= 0.0:
        return 0.0
    if _phi_and_slope(n, x, 1.0)[1] <= 0.0:
        return 1.0
    b, _ = _golden_min(lambda t: _phi_and_slope(n, x, t)[0], 0.0, 1.0, tol)
    return float(b)


@dataclass(frozen=True)
class BoundParams:
    """Parameters of the general lower bound."""

    N: int
    n: int
    lam: float
    alpha: float
    beta: float

    def __post_init__(self):
        if self.N <= 0 or self.n < 0 or self.n >= self.N:
            raise DomainError(f"need 0 <= n < N, got n={self.n}, N={self.N}")
        _check_alpha(self.lam, self.alpha)
        _check_beta(self.beta)


@dataclass(frozen=True)
class BoundReport:
    """Evaluated general bound together with its intermediate quantities.

    ``inner`` is the bracketed quantity under the square root; the bound is
    only asserted when it is non-negative (``valid``), otherwise ``value`` is 0.
    """

    value: float
    s_star: float
    li_value: float
    k_beta_sq: float
    inner: float
    valid: bool
    params: BoundParams

    @property
    def alpha(self) -> float:
        return self.params.alpha

    @property
    def beta(self) -> float:
        return self.params.beta


def _log_rho(lam: float, s: float) -> float:
    return math.log(s - lam) - math.log1p(-lam * s)


def general_bound(params: BoundParams) -> BoundReport:
    """Lower bound on the distance from f to R_{n,n} for a single ``(alpha, beta)``."""
    N, n, lam, alpha, beta = params.N, params.n, params.lam, params.alpha, params.beta
    s = s_star(lam, alpha)
    x = s ** -2
    li = polylog(beta, x)
    m = floor_ratio(N, alpha)
    log_term = (
        2.0 * N * _log_rho(lam, s)
        + beta * math.log(n + 1.0)
        + math.log(li)
        + 2.0 * (2 - m) * math.log(s)
        - math.log(N)
        - 2.0 * math.log(s * s - 1.0)
    )
    term = math.exp(log_term) if log_term < 700.0 else math.inf
    inner = 1.0 - n / N - term
    valid = inner >= 0.0
    value = math.sqrt(alpha * inner) if valid else 0.0
    k_sq = (n + 1.0) ** beta * li / x
    return BoundReport(value, s, li, k_sq, inner, valid, params)


def bound_at_alpha(N: int, n: int, lam: float, alpha: float) -> BoundReport:
    """General bound at ``alpha`` with ``beta`` re-optimised (``beta_star`` at ``x = s*^-2``)."""
    s = s_star(lam, alpha)
    beta = beta_star(n, s ** -2)
    return general_bound(BoundParams(N, n, lam, alpha, beta))


def _better(rep: BoundReport, best: BoundReport | None) -> bool:
    if best is None:
        return True
    if rep.value != best.value:
        return rep.value > best.value
    return rep.alpha < best.alpha


def optimize_alpha_beta(
    N: int,
    n: int,
    lam: float,
    *,
    max_intervals: int = 100_000,
    prescan: int = 2048,
) -> BoundReport:
    """Maximise the general bound over ``alpha in (0, alpha0)`` and ``beta in [0, 1]``.

    ``floor(N/alpha)`` is constant (= m) on ``(N/(m+1), N/m]``; the bound is
    continuous there and jumps at the ends, so each such interval is searched
    separately by golden section, starting from the one touching ``alpha0``.
    Intervals whose a-priori ceiling ``sqrt(N/m * (1 - n/N))`` cannot beat the
    current best are skipped, which ends the scan. A coarse uniform pre-scan
    seeds the best value and is the fallback if the interval cap is reached.
    Ties go to the smaller alpha.
    """
    if N <= 0 or n < 0 or n >= N:
        raise DomainError(f"need 0 <= n < N, got n={n}, N={N}")
    a0 = alpha0(lam)
    a_top = a0 * (1.0 - 1e-9)
    tol = 1e-9 * a0

    def evaluate(alpha: float) -> BoundReport:
        return bound_at_alpha(N, n, lam, alpha)

    best: BoundReport | None = None
    for i in range(prescan):
        rep = evaluate(a0 * (i + 0.5) / prescan)
        if _better(rep, best):
            best = rep

    m = floor_ratio(N, a_top)
    for _ in range(max_intervals):
        lo = N / (m + 1)
        hi = a_top if m == 0 else min(N / m, a_top)
        if best.value > 0.0 and math.sqrt(hi * (1.0 - n / N)) <= best.value:
            break
        if hi > lo:
            seen: dict[float, BoundReport] = {}

            def neg_value(alpha: float) -> float:
                rep = evaluate(alpha)
                seen[alpha] = rep
                return -rep.value

            _golden_min(neg_value, lo, hi, tol)
            neg_value(hi)
            for rep in seen.values():
                if floor_ratio(N, rep.alpha) == m and _better(rep, best):
                    best = rep
        m += 1
    return best


def _check_k_admissible(n: int, alpha: float, k: float) -> None:
    if k * alpha < n * (1.0 - 1e-12):
        raise DomainError(f"index {k} below n/alpha = {n / alpha!r}")


def coeff_bound_blaschke(n: int, lam: float, alpha: float, k: int) -> float:
    """Bound on ``|B^(k)|`` for ``B`` of degree ``n`` with zeros in ``|z| <= lam``, ``k >= n/alpha``.

    Equals ``(b_lam(s*) / s***(k/n))**n``. The degree-0 case is the constant
    product: 1 at ``k = 0`` and 0 beyond.
    """
    if n < 0 or k < 0:
        raise DomainError("n and k must be non-negative")
    _check_alpha(lam, alpha)
    if n == 0:
        return 1.0 if k == 0 else 0.0
    _check_k_admissible(n, alpha, k)
    s = s_star(lam, alpha)
    return math.exp(n * _log_rho(lam, s) - k * math.log(s))


def coeff_tail_bound(n: int, lam: float, alpha: float, k0: int) -> float:
    """Bound on ``sum_{k >= k0} |B^(k)|**2``: ``b_lam(s*)**(2n) s*^(-2 k0) s*^2 / (s*^2 - 1)``."""
    if n < 0 or k0 < 0:
        raise DomainError("n and k0 must be non-negative")
    _check_alpha(lam, alpha)
    if n == 0:
        return 1.0 if k0 == 0 else 0.0
    _check_k_admissible(n, alpha, k0)
    s = s_star(lam, alpha)
    log_val = 2.0 * n * _log_rho(lam, s) - 2.0 * k0 * math.log(s) + 2.0 * math.log(s) - math.log(s * s - 1.0)
    return math.exp(log_val) if log_val < 700.0 else math.inf


def blaschke_tail_bound(degree: int, lam: float, k0: int) -> float:
    """Certified bound on the coefficient mass of index ``>= k0``, capped at 1.

    Uses ``coeff_tail_bound`` with the largest admissible exponent
    ``alpha = degree / k0``; when that is not below ``alpha0`` the trivial
    bound 1 (unit total mass) is returned. ``lam == 0`` means every zero is at
    the origin, so the product is a monomial.
    """
    if degree == 0:
        return 0.0 if k0 >= 1 else 1.0
    if lam == 0.0:
        return 0.0 if k0 > degree else 1.0
    if k0 <= 0:
        return 1.0
    alpha = degree / k0
    if alpha >= alpha0(lam) * (1.0 - 1e-12):
        return 1.0
    return min(1.0, coeff_tail_bound(degree, lam, alpha, k0))


def product_coeff_bound(N: int, n: int, lam: float, alpha: float, beta: float, k: int) -> float:
    """Bound on ``|a_k|``, ``k <= -N/alpha``, for the Fourier coefficients of ``f^sharp b_n``.

    ``(n+1)**(beta/2) * s*^-(|k|-1) * b_lam(s*)**N * sqrt(Li_beta(s*^-2))``.
    """
    if N <= 0 or n < 0 or n >= N:
        raise DomainError(f"need 0 <= n < N, got n={n}, N={N}")
    _check_alpha(lam, alpha)
    _check_beta(beta)
    if k > 0 or -k * alpha < N * (1.0 - 1e-12):
        raise DomainError(f"index {k} above -N/alpha = {-N / alpha!r}")
    s = s_star(lam, alpha)
    li = polylog(beta, s ** -2)
    log_val = (
        0.5 * beta * math.log(n + 1.0)
        - (abs(k) - 1) * math.log(s)
        + N * _log_rho(lam, s)
        + 0.5 * math.log(li)
    )
    return math.exp(log_val) if log_val < 700.0 else math.inf
