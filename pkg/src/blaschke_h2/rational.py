"""Complex polynomials and rational functions in ascending-power form.

Only low degrees are expected here (approximants of degree <= ~20).
High-degree Blaschke products must stay in factored form, see
:mod:`blaschke_h2.blaschke`; expanding ``(z - 0.5)**100`` and evaluating it
on the circle loses every significant digit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DomainError

__all__ = ["Polynomial", "RationalFunction", "reciprocal_polynomial", "sharp", "check"]


def _as_coeffs(coeffs) -> np.ndarray:
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
    if c.ndim != 1:
        raise DomainError("polynomial coefficients must be one-dimensional")
    if c.size == 0:
        c = np.zeros(1, dtype=complex)
    nz = np.flatnonzero(c)
    c = c[: nz[-1] + 1] if nz.size else c[:1] * 0
    c.setflags(write=False)
    return c


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Polynomial ``sum(coeffs[j] * z**j)``, trimmed of exact-zero leading terms."""

    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs))

    @classmethod
    def from_roots(cls, roots) -> "Polynomial":
        roots = np.asarray(roots, dtype=complex)
        if roots.size == 0:
            return cls([1.0])
        return cls(P.polyfromroots(roots))

    @classmethod
    def monomial(cls, k: int, c: complex = 1.0) -> "Polynomial":
        out = np.zeros(k + 1, dtype=complex)
        out[k] = c
        return cls(out)

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 1 and self.coeffs[0] == 0

    @property
    def degree(self) -> int:
        """Exact degree; ``-1`` for the zero polynomial."""
        return -1 if self.is_zero else self.coeffs.size - 1

    def __call__(self, z):
        return P.polyval(z, self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(P.polyadd(self.coeffs, other.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(P.polysub(self.coeffs, other.coeffs))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Polynomial(P.polymul(self.coeffs, other.coeffs))
        return Polynomial(self.coeffs * complex(other))

    __rmul__ = __mul__

    def roots(self) -> np.ndarray:
        if self.degree < 1:
            return np.zeros(0, dtype=complex)
        return P.polyroots(self.coeffs)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``z**k``."""
        return Polynomial(np.concatenate([np.zeros(k, dtype=complex), self.coeffs]))

    def allclose(self, other: "Polynomial", atol: float = 1e-12) -> bool:
        n = max(self.coeffs.size, other.coeffs.size)
        a = np.pad(self.coeffs, (0, n - self.coeffs.size))
        b = np.pad(other.coeffs, (0, n - other.coeffs.size))
        return bool(np.allclose(a, b, rtol=0, atol=atol))

    def __repr__(self):
        return f"Polynomial({self.coeffs.tolist()!r})"


def reciprocal_polynomial(q: Polynomial, n: int) -> Polynomial:
    """Return ``z**n * conj(q(1/conj(z)))``, reading ``q`` as an element of P_n."""
    if q.degree > n:
        raise DomainError(f"deg q = {q.degree} exceeds n = {n}")
    c = np.zeros(n + 1, dtype=complex)
    c[: q.coeffs.size] = q.coeffs
    return Polynomial(np.conj(c[::-1]))


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """Quotient ``numerator / denominator`` of complex polynomials."""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if not isinstance(num, Polynomial):
            object.__setattr__(self, "numerator", Polynomial(num))
        if not isinstance(den, Polynomial):
            object.__setattr__(self, "denominator", Polynomial(den))
        if self.denominator.is_zero:
            raise DomainError("denominator is identically zero")

    @classmethod
    def constant(cls, c: complex) -> "RationalFunction":
        return cls(Polynomial([c]), Polynomial([1.0]))

    @property
    def degree(self) -> int:
        return max(self.numerator.degree, self.denominator.degree, 0)

    def __call__(self, z):
        return self.numerator(z) / self.denominator(z)

    def poles(self) -> np.ndarray:
        return self.denominator.roots()

    def zeros(self) -> np.ndarray:
        return self.numerator.roots()

    def value_at_infinity(self) -> complex:
        dn, dd = self.numerator.degree, self.denominator.degree
        if dn > dd:
            raise DomainError("rational function has a pole at infinity")
        if dn < dd:
            return 0j
        return complex(self.numerator.coeffs[-1] / self.denominator.coeffs[-1])

    def __repr__(self):
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"


def sharp(f: RationalFunction) -> RationalFunction:
    """Reflection ``conj(f(1/conj(z)))`` as a rational function of the same degree."""
    a, b = f.numerator.degree, f.denominator.degree
    if a < 0:
        return RationalFunction(Polynomial([0.0]), Polynomial([1.0]))
    num = reciprocal_polynomial(f.numerator, a)
    den = reciprocal_polynomial(f.denominator, b)
    if b >= a:
        num = num.shift(b - a)
    else:
        den = den.shift(a - b)
    return RationalFunction(num, den)


def check(f: RationalFunction) -> RationalFunction:
    """``z**-1 * conj(f(1/conj(z)))``; swaps H^2 and its conjugate companion."""
    g = sharp(f)
    return RationalFunction(g.numerator, g.denominator.shift(1))
