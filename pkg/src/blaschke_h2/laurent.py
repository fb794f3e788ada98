"""Finite windows of Laurent/Fourier series and boundary sampling on the circle.

A function on the unit circle is carried either as its samples at the
M-th roots of unity (:class:`BoundaryGrid`) or as a contiguous window of
Fourier coefficients (:class:`LaurentSeries`). DFT bin ``j`` stands for the
index ``j`` when ``j < M/2`` and ``j - M`` otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, GridCapError
from .rational import RationalFunction

__all__ = [
    "LaurentSeries",
    "BoundaryGrid",
    "circle_points",
    "dft_coefficients",
    "synthesize",
    "project_plus",
    "project_minus",
    "l2_norm",
    "brezis_winding",
    "winding_rational",
    "grid_size_for_tail",
    "GRID_CAP",
]

GRID_CAP = 1 << 22
UNIT_CIRCLE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class LaurentSeries:
    """Coefficients ``a_k`` for ``k_min <= k <= k_max``; ``coeffs[j]`` is ``a_{k_min + j}``.

    An empty ``coeffs`` array is the zero series with an empty window.
    """

    k_min: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex)).copy()
        if c.ndim != 1:
            raise DomainError("coefficients must be one-dimensional")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "k_min", int(self.k_min))

    @classmethod
    def empty(cls) -> "LaurentSeries":
        return cls(0, np.zeros(0, dtype=complex))

    @classmethod
    def from_dict(cls, d: dict[int, complex]) -> "LaurentSeries":
        if not d:
            return cls.empty()
        lo, hi = min(d), max(d)
        c = np.zeros(hi - lo + 1, dtype=complex)
        for k, v in d.items():
            c[k - lo] = v
        return cls(lo, c)

    def __len__(self) -> int:
        return self.coeffs.size

    @property
    def k_max(self) -> int:
        return self.k_min + len(self) - 1

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.k_min, self.k_min + len(self))

    def __getitem__(self, k: int) -> complex:
        j = k - self.k_min
        if 0 <= j < len(self):
            return complex(self.coeffs[j])
        return 0j

    def restrict(self, lo: int, hi: int) -> "LaurentSeries":
        """Sub-window ``[lo, hi]`` clipped to the stored window."""
        lo, hi = max(lo, self.k_min), min(hi, self.k_max)
        if hi < lo:
            return LaurentSeries.empty()
        return LaurentSeries(lo, self.coeffs[lo - self.k_min: hi - self.k_min + 1])

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not len(other):
            return self
        if not len(self):
            return other
        lo, hi = min(self.k_min, other.k_min), max(self.k_max, other.k_max)
        c = np.zeros(hi - lo + 1, dtype=complex)
        c[self.k_min - lo: self.k_max - lo + 1] += self.coeffs
        c[other.k_min - lo: other.k_max - lo + 1] += other.coeffs
        return LaurentSeries(lo, c)

    def to_dict(self) -> dict[int, complex]:
        return {int(k): complex(v) for k, v in zip(self.indices, self.coeffs)}

    def allclose(self, other: "LaurentSeries", atol: float = 1e-12) -> bool:
        diff = self + LaurentSeries(other.k_min, -other.coeffs) if len(other) else self
        return bool(np.all(np.abs(diff.coeffs) <= atol))


def circle_points(M: int) -> np.ndarray:
    """The M-th roots of unity ``exp(2 pi i j / M)``, ``j = 0..M-1``."""
    return np.exp(2j * np.pi * np.arange(M) / M)


def _check_size(M: int) -> None:
    if M < 2 or M & (M - 1):
        raise DomainError(f"grid size must be a power of two >= 2, got {M}")


@dataclass(frozen=True, eq=False)
class BoundaryGrid:
    """Samples of a function at the M-th roots of unity."""

    samples: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=complex)
        _check_size(s.size)
        object.__setattr__(self, "samples", s)

    @classmethod
    def from_function(cls, func: Callable[[np.ndarray], np.ndarray], M: int) -> "BoundaryGrid":
        _check_size(M)
        return cls(np.asarray(func(circle_points(M)), dtype=complex) * np.ones(M))

    @property
    def size(self) -> int:
        return self.samples.size


def _alias_window(M: int, k_min: int, k_max: int) -> None:
    if k_max < k_min:
        raise DomainError("empty coefficient window")
    if k_max - k_min + 1 > M or k_min < -(M // 2) or k_max >= M // 2:
        raise DomainError(f"window [{k_min}, {k_max}] exceeds the grid range [{-(M // 2)}, {M // 2 - 1}]")


def dft_coefficients(grid: BoundaryGrid, k_min: int, k_max: int) -> LaurentSeries:
    """Fourier coefficients ``a_k``, ``k_min <= k <= k_max``, estimated by the DFT."""
    M = grid.size
    _alias_window(M, k_min, k_max)
    a = np.fft.fft(grid.samples) / M
    return LaurentSeries(k_min, a[np.arange(k_min, k_max + 1) % M])


def synthesize(series: LaurentSeries, M: int) -> BoundaryGrid:
    """Boundary samples of a series supported in ``[-M/2, M/2)``."""
    _check_size(M)
    bins = np.zeros(M, dtype=complex)
    if len(series):
        _alias_window(M, series.k_min, series.k_max)
        bins[series.indices % M] = series.coeffs
    return BoundaryGrid(np.fft.ifft(bins) * M)


def project_plus(s: LaurentSeries) -> LaurentSeries:
    """Part with non-negative indices."""
    return s.restrict(0, s.k_max)


def project_minus(s: LaurentSeries) -> LaurentSeries:
    """Part with strictly negative indices."""
    return s.restrict(s.k_min, -1)


def l2_norm(s: LaurentSeries) -> float:
    """``sqrt(sum |a_k|**2)`` over the window."""
    return float(np.sqrt(np.sum(np.abs(s.coeffs) ** 2)))


def brezis_winding(s: LaurentSeries) -> float:
    """``sum k |a_k|**2``; the winding number of a unimodular function when untruncated."""
    return float(np.sum(s.indices * np.abs(s.coeffs) ** 2))


def _count_inside(roots: np.ndarray, what: str) -> int:
    mod = np.abs(roots)
    if np.any(np.abs(mod - 1.0) < UNIT_CIRCLE_TOL):
        raise DomainError(f"{what} on (or numerically on) the unit circle")
    return int(np.sum(mod < 1.0))


def winding_rational(f: RationalFunction) -> int:
    """Winding number of ``f`` on the circle: zeros minus poles inside the disk."""
    if f.numerator.is_zero:
        raise DomainError("winding number of the zero function is undefined")
    return _count_inside(f.zeros(), "zero") - _count_inside(f.poles(), "pole")


def grid_size_for_tail(
    tail: Callable[[int], float],
    tol: float,
    *,
    min_size: int = 2,
    cap: int = GRID_CAP,
) -> int:
    """Smallest power of two ``M >= min_size`` with ``tail(M // 2) <= tol``.

    ``tail(k0)`` must bound the coefficient mass beyond index ``k0`` and be
    non-increasing in ``k0``.
    """
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    M = 2
    while M < min_size:
        M *= 2
    while tail(M // 2) > tol:
        M *= 2
        if M > cap:
            raise GridCapError(f"needs more than {cap} grid points for tolerance {tol:g}")
    return M
