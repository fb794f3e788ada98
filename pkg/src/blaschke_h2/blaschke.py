"""Finite Blaschke products in factored form.

A product is stored as a unimodular constant ``c`` and its zeros ``zeta_l``
in the open disk, with raw factors ``(z - zeta) / (1 - conj(zeta) z)``. A
zero at the origin contributes the factor ``z``. Products are never
expanded for evaluation: ``(z - 0.5)**100`` as a polynomial is useless on
the circle, while the factored form is accurate to rounding.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .bounds import blaschke_tail_bound
from .errors import DomainError, GridCapError
from .laurent import GRID_CAP, BoundaryGrid, LaurentSeries, circle_points, dft_coefficients, grid_size_for_tail
from .rational import Polynomial, RationalFunction, reciprocal_polynomial

__all__ = [
    "BlaschkeProduct",
    "taylor_coeffs_series",
    "taylor_coeffs_fft",
    "truncation_index",
    "parse_blaschke_text",
    "format_blaschke_text",
    "read_blaschke",
    "parse_zeros_inline",
]

ZERO_MODULUS_MARGIN = 1e-12
CONSTANT_TOL = 1e-12
POLE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class BlaschkeProduct:
    """``c * prod_l (z - zeta_l) / (1 - conj(zeta_l) z)``.

    Parameters
    ----------
    zeros : array_like of complex
        Zeros in the open unit disk, repeated by multiplicity.
    constant : complex
        Unimodular constant ``c``.
    """

    zeros: np.ndarray
    constant: complex = 1.0 + 0.0j

    def __post_init__(self):
        z = np.atleast_1d(np.asarray(self.zeros, dtype=complex)).ravel().copy()
        if not np.all(np.isfinite(z)):
            raise DomainError("zeros must be finite")
        if z.size and np.max(np.abs(z)) >= 1.0 - ZERO_MODULUS_MARGIN:
            raise DomainError(f"zero of modulus {np.max(np.abs(z))!r} is not inside the open disk")
        c = complex(self.constant)
        if abs(abs(c) - 1.0) > CONSTANT_TOL:
            raise DomainError(f"constant {c!r} is not unimodular")
        z.setflags(write=False)
        object.__setattr__(self, "zeros", z)
        object.__setattr__(self, "constant", c)
        uniq, counts = _group(z)
        object.__setattr__(self, "_groups", (uniq, counts))

    @property
    def degree(self) -> int:
        return int(self.zeros.size)

    @property
    def max_modulus(self) -> float:
        return float(np.max(np.abs(self.zeros))) if self.degree else 0.0

    def evaluate(self, z):
        """Value at ``z`` (scalar or array). Raises at a pole ``1/conj(zeta)`` for scalars."""
        z_arr = np.asarray(z, dtype=complex)
        out = np.full(z_arr.shape, self.constant, dtype=complex)
        for w, m in zip(*self._groups):
            den = 1.0 - np.conj(w) * z_arr
            if z_arr.ndim == 0 and abs(den) < POLE_TOL:
                raise DomainError(f"evaluation at the pole {1 / np.conj(w)!r}")
            fac = (z_arr - w) / den
            out *= fac if m == 1 else fac ** m
        return complex(out) if z_arr.ndim == 0 else out

    __call__ = evaluate

    def on_circle(self, M: int) -> np.ndarray:
        """Samples at the M-th roots of unity."""
        return self.evaluate(circle_points(M))

    def sharp_values(self, z):
        """``conj(b(1/conj(z)))``; equals ``1/b(z)`` and ``conj(b(z))`` on the circle."""
        z_arr = np.asarray(z, dtype=complex)
        return np.conj(self.evaluate(1.0 / np.conj(z_arr)))

    @property
    def value_at_zero(self) -> complex:
        return complex(self.constant * np.prod(-self.zeros))

    def numerator_polynomial(self) -> Polynomial:
        """``c * q`` with ``q`` monic, roots at the zeros."""
        return self.constant * Polynomial.from_roots(self.zeros)

    def as_rational(self) -> RationalFunction:
        """``c q / q~``. Only sensible for moderate degree."""
        q = Polynomial.from_roots(self.zeros)
        return RationalFunction(self.constant * q, reciprocal_polynomial(q, self.degree))

    def multiply(self, other: "BlaschkeProduct") -> "BlaschkeProduct":
        return BlaschkeProduct(np.concatenate([self.zeros, other.zeros]), self.constant * other.constant)

    def tail_bound(self, k0: int) -> float:
        """Certified bound on ``sum_{k >= k0} |a_k|**2``."""
        return blaschke_tail_bound(self.degree, self.max_modulus, k0)

    def __repr__(self):
        return f"BlaschkeProduct(zeros={self.zeros.tolist()!r}, constant={self.constant!r})"


def _group(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Distinct zeros (exact equality) with multiplicities, in first-seen order."""
    seen: dict[complex, int] = {}
    for w in z.tolist():
        seen[w] = seen.get(w, 0) + 1
    return np.array(list(seen), dtype=complex), np.array(list(seen.values()), dtype=int)


def _factor_series(w: complex, k_max: int, cutoff: float) -> np.ndarray:
    """Taylor coefficients of ``(z - w)/(1 - conj(w) z)`` up to ``k_max``.

    ``-w + (1 - |w|^2) sum_{k>=1} conj(w)^(k-1) z^k``, cut where
    ``|w|^k (1 - |w|^2) < cutoff`` (``cutoff = 0`` keeps every term).
    """
    r = abs(w)
    if r == 0.0:
        out = np.zeros(min(k_max, 1) + 1, dtype=complex)
        if k_max >= 1:
            out[1] = 1.0
        return out
    length = k_max
    if cutoff > 0.0:
        length = min(k_max, max(1, math.ceil(math.log(cutoff / (1.0 - r * r)) / math.log(r))))
    out = np.empty(length + 1, dtype=complex)
    out[0] = -w
    if length >= 1:
        out[1:] = (1.0 - r * r) * np.conj(w) ** np.arange(length)
    return out


def taylor_coeffs_series(b: BlaschkeProduct, k_max: int, cutoff: float = 1e-15) -> LaurentSeries:
    """Coefficients ``a_0..a_kmax`` by multiplying per-factor expansions.

    Each factor series is cut where its geometric terms drop below
    ``cutoff``. Pass ``cutoff=0`` for the exact (untruncated up to ``k_max``)
    oracle, needed when coefficients below ``cutoff`` matter.
    """
    if k_max < 0:
        raise DomainError("k_max must be non-negative")
    acc = np.zeros(k_max + 1, dtype=complex)
    acc[0] = b.constant
    for w in b.zeros:
        acc = np.convolve(acc, _factor_series(complex(w), k_max, cutoff))[: k_max + 1]
    out = np.zeros(k_max + 1, dtype=complex)
    out[: acc.size] = acc
    return LaurentSeries(0, out)


def taylor_coeffs_fft(
    b: BlaschkeProduct, k_max: int, tol: float = 1e-12, *, cap: int = GRID_CAP
) -> LaurentSeries:
    """Coefficients ``a_0..a_kmax`` from boundary samples, accurate to ``tol``.

    The grid is the smallest power of two whose certified tail mass beyond
    ``M/2`` is below ``tol**2``, so every aliased contribution is below ``tol``.
    """
    if k_max < 0:
        raise DomainError("k_max must be non-negative")
    if tol <= 0:
        raise DomainError("tol must be positive")
    M = grid_size_for_tail(b.tail_bound, tol * tol, min_size=2 * (k_max + 1), cap=cap)
    return dft_coefficients(BoundaryGrid(b.on_circle(M)), 0, k_max)


def truncation_index(b: BlaschkeProduct, tol: float = 1e-14, *, cap: int = GRID_CAP) -> int:
    """Smallest ``K`` whose certified tail ``sum_{k > K} |a_k|**2`` is ``<= tol``."""
    if b.degree == 0:
        return 0
    hi = b.degree
    while b.tail_bound(hi + 1) > tol:
        hi *= 2
        if hi > cap:
            raise GridCapError("zeros too close to the circle for the requested truncation")
    lo = hi // 2
    while lo < hi:
        mid = (lo + hi) // 2
        if b.tail_bound(mid + 1) <= tol:
            hi = mid
        else:
            lo = mid + 1
    return hi


# ---------------------------------------------------------------- text format

def parse_blaschke_text(text: str) -> BlaschkeProduct:
    """Parse ``c_re c_im`` followed by one ``re im`` line per zero; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(f"line {lineno}: expected two numbers, got {line!r}")
        try:
            rows.append(complex(float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise DomainError(f"line {lineno}: {exc}") from None
    if not rows:
        raise DomainError("missing constant line")
    return BlaschkeProduct(np.array(rows[1:], dtype=complex), rows[0])


def format_blaschke_text(b: BlaschkeProduct) -> str:
    lines = [f"{b.constant.real:.17g} {b.constant.imag:.17g}"]
    lines += [f"{w.real:.17g} {w.imag:.17g}" for w in b.zeros.tolist()]
    return "\n".join(lines) + "\n"


def read_blaschke(path: str | Path) -> BlaschkeProduct:
    return parse_blaschke_text(Path(path).read_text(encoding="utf-8"))


def parse_zeros_inline(spec: str, constant: complex = 1.0) -> BlaschkeProduct:
    """Parse ``"re,im;re,im;..."`` (empty string gives the constant product)."""
    zeros = []
    for item in filter(None, (s.strip() for s in spec.split(";"))):
        parts = item.split(",")
        if len(parts) != 2:
            raise DomainError(f"bad zero {item!r}; expected 're,im'")
        try:
            zeros.append(complex(float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise DomainError(str(exc)) from None
    return BlaschkeProduct(np.array(zeros, dtype=complex), constant)
