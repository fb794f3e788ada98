import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from blaschke_h2.errors import DomainError
from blaschke_h2.rational import Polynomial, RationalFunction, check, reciprocal_polynomial, sharp

cplx = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


class TestPolynomial:
    def test_trims_leading_zeros(self):
        p = Polynomial([1, 2, 0, 0])
        assert p.degree == 1
        assert Polynomial([0, 0]).degree == -1

    def test_arithmetic(self):
        p, q = Polynomial([1, 1]), Polynomial([-1, 1])
        assert (p * q).allclose(Polynomial([-1, 0, 1]))
        assert (p + q).allclose(Polynomial([0, 2]))
        assert (p - q).allclose(Polynomial([2]))
        assert (2 * p).allclose(Polynomial([2, 2]))

    def test_roots_roundtrip(self):
        roots = np.array([0.5, -0.25j, 0.1 + 0.2j])
        p = Polynomial.from_roots(roots)
        assert np.allclose(np.sort_complex(p.roots()), np.sort_complex(roots))

    def test_shift(self):
        assert Polynomial([1, 2]).shift(2).allclose(Polynomial([0, 0, 1, 2]))


class TestReciprocal:
    def test_linear(self):
        assert reciprocal_polynomial(Polynomial([-0.5, 1]), 1).allclose(Polynomial([1, -0.5]))

    def test_constant_padded(self):
        assert reciprocal_polynomial(Polynomial([1]), 2).allclose(Polynomial([0, 0, 1]))

    def test_degree_too_high(self):
        with pytest.raises(DomainError):
            reciprocal_polynomial(Polynomial([1, 1, 1]), 1)

    @given(st.lists(cplx, min_size=1, max_size=6), st.integers(0, 3))
    @settings(max_examples=60, deadline=None)
    def test_involution(self, coeffs, extra):
        q = Polynomial(coeffs)
        n = max(q.degree, 0) + extra
        assert reciprocal_polynomial(reciprocal_polynomial(q, n), n).allclose(q, atol=1e-12)

    @given(st.lists(cplx, min_size=1, max_size=5), st.floats(0, 2 * np.pi))
    @settings(max_examples=40, deadline=None)
    def test_definition_pointwise(self, coeffs, theta):
        q = Polynomial(coeffs)
        n = max(q.degree, 0) + 1
        z = 0.7 * np.exp(1j * theta)
        expected = z ** n * np.conj(q(1 / np.conj(z)))
        assert abs(reciprocal_polynomial(q, n)(z) - expected) <= 1e-9 * max(1.0, abs(expected))


class TestSharp:
    def test_monomial(self):
        f = RationalFunction([0, 0, 0, 1], [1])
        g = sharp(f)
        assert g.numerator.allclose(Polynomial([1]))
        assert g.denominator.allclose(Polynomial([0, 0, 0, 1]))

    def test_blaschke_factor_inverts(self):
        f = RationalFunction([-0.5, 1], [1, -0.5])
        g = sharp(f)
        z = np.exp(1j * np.linspace(0, 6, 7)) * 1.3
        assert np.allclose(g(z), 1 / f(z))

    def test_involution(self):
        f = RationalFunction([1 + 1j, 0.3, 2], [1, 0.2j])
        z = np.array([0.3 + 0.1j, -0.7, 1.5j])
        assert np.allclose(sharp(sharp(f))(z), f(z))

    def test_degree_preserved(self):
        f = RationalFunction([1, 2, 3], [1, 0.5])
        assert sharp(f).degree == f.degree

    def test_check_is_shifted_sharp(self):
        f = RationalFunction([0.2, 1], [1, -0.3])
        z = np.array([0.5, 2j])
        assert np.allclose(check(f)(z), sharp(f)(z) / z)

    def test_zero_denominator_rejected(self):
        with pytest.raises(DomainError):
            RationalFunction([1], [0])
