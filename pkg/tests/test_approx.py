import math

import numpy as np
import pytest

from blaschke_h2.approx import (
    PoleConfig,
    SolverConfig,
    approximant_error_direct,
    criterion,
    criterion_forms,
    optimal_numerator,
    solve_rab,
    solve_sweep,
)
from blaschke_h2.blaschke import BlaschkeProduct
from blaschke_h2.bounds import delay_bound
from blaschke_h2.errors import DomainError, GridCapError
from blaschke_h2.rational import Polynomial, RationalFunction, reciprocal_polynomial, sharp

SQRT3_2 = math.sqrt(3) / 2
Z2 = BlaschkeProduct([0.0, 0.0])


def brute_force_single_pole(f: BlaschkeProduct, size: int = 400, M: int = 512) -> float:
    """Minimum of the criterion over a polar grid of single poles, by direct FFT."""
    z = np.exp(2j * np.pi * np.arange(M) / M)
    cf = np.conj(f(z))
    radii = (np.arange(size) + 0.5) / size
    thetas = 2 * np.pi * np.arange(size) / size
    best = math.inf
    for r in radii:
        w = r * np.exp(1j * thetas)[:, None]
        g = cf * (z - w) / (1 - np.conj(w) * z)
        a = np.fft.fft(g, axis=1) / M
        J = np.sum(np.abs(a[:, M // 2:]) ** 2, axis=1)
        best = min(best, float(np.sqrt(np.min(J))))
    return best


class TestCriterion:
    def test_no_poles(self):
        assert criterion(BlaschkeProduct(np.zeros(7)), PoleConfig([])) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("zeta", [0.3, 0.5j, -0.2 + 0.6j, 0.95])
    def test_closed_form_z2(self, zeta):
        r = abs(zeta) ** 2
        assert criterion(Z2, PoleConfig([zeta])) ** 2 == pytest.approx(r + (1 - r) ** 2, abs=1e-12)

    def test_closed_form_monomial(self):
        # f = z^N, one pole: J = 1 - r^(N-1) (1 - r)
        N, zeta = 30, 0.9
        r = zeta ** 2
        assert criterion(BlaschkeProduct(np.zeros(N)), PoleConfig([zeta])) ** 2 == pytest.approx(
            1 - r ** (N - 1) * (1 - r), abs=1e-12
        )

    def test_rotation_invariance(self):
        f = BlaschkeProduct(np.zeros(12))
        p = np.array([0.4 + 0.3j, -0.7j, 0.8])
        base = criterion(f, PoleConfig(p))
        for theta in (0.3, 1.7, 4.0):
            assert criterion(f, PoleConfig(p * np.exp(1j * theta))) == pytest.approx(base, abs=1e-10)

    def test_parseval_forms_agree(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            f = BlaschkeProduct(np.sqrt(rng.uniform(0, 0.8, 6)) * np.exp(2j * np.pi * rng.uniform(size=6)))
            p = np.sqrt(rng.uniform(0, 0.95, 3)) * np.exp(2j * np.pi * rng.uniform(size=3))
            J, J_alt = criterion_forms(f, PoleConfig(p))
            assert abs(J - J_alt) <= 1e-10

    def test_grid_cap(self):
        with pytest.raises(GridCapError):
            criterion(Z2, PoleConfig([1 - 1e-9]))

    def test_pole_outside(self):
        with pytest.raises(DomainError):
            PoleConfig([1.2])

    def test_symmetric_config_validation(self):
        PoleConfig([0.3 + 0.2j, 0.3 - 0.2j, 0.5], real_symmetric=True)
        with pytest.raises(DomainError):
            PoleConfig([0.3 + 0.2j], real_symmetric=True)


class TestOptimalNumerator:
    def test_analytic_oracle(self):
        zeta = np.exp(0.7j) / math.sqrt(2)
        fs = RationalFunction([1], [0, 0, 1])  # 1/z^2
        q = Polynomial.from_roots([zeta])
        p = optimal_numerator(fs, q, 1)
        z = np.exp(2j * np.pi * np.arange(256) / 256)
        err = math.sqrt(np.mean(np.abs(fs(z) - p(z) / q(z)) ** 2))
        assert err == pytest.approx(SQRT3_2, abs=1e-12)

    def test_degenerate_n0(self):
        assert optimal_numerator(RationalFunction([1], [0, 1]), Polynomial([1]), 0).is_zero

    def test_constant_offset_ignored(self):
        fs1 = RationalFunction([1], [0, 0, 1])
        fs2 = RationalFunction([1, 0, 3], [0, 0, 1])  # 3 + 1/z^2
        q = Polynomial.from_roots([0.4j])
        assert optimal_numerator(fs1, q, 1).allclose(optimal_numerator(fs2, q, 1), atol=1e-12)

    def test_orthogonal_decomposition(self):
        f = BlaschkeProduct([0.3, -0.5j, 0.6 + 0.1j, 0.0])
        poles = np.array([0.2 + 0.4j, -0.5])
        q = Polynomial.from_roots(poles)
        p = optimal_numerator(f.sharp_values, q, 2)
        J = criterion(f, PoleConfig(poles)) ** 2
        h0 = np.conj(f.value_at_zero)
        z = np.exp(2j * np.pi * np.arange(1024) / 1024)
        h = f.sharp_values(z) - h0
        assert np.mean(np.abs(h - p(z) / q(z)) ** 2) == pytest.approx(J, abs=1e-12)
        # any other numerator adds exactly ||delta / q~||^2
        delta = Polynomial([0.1 - 0.05j, 0.02])
        qt = reciprocal_polynomial(q, 2)
        worse = np.mean(np.abs(h - (p + delta)(z) / q(z)) ** 2)
        assert worse == pytest.approx(J + np.mean(np.abs(delta(z) / qt(z)) ** 2), abs=1e-12)

    def test_q_root_outside(self):
        with pytest.raises(DomainError):
            optimal_numerator(RationalFunction([1], [0, 1]), Polynomial.from_roots([2.0]), 1)


class TestErrorDirect:
    def test_zero_approximant(self):
        f = BlaschkeProduct([0.0, 0.5, -0.2j])
        assert approximant_error_direct(f, RationalFunction([0], [1]), "rab") == pytest.approx(1.0)

    def test_exact_rab(self):
        f = BlaschkeProduct([0.0, 0.5])
        assert approximant_error_direct(f, sharp(f.as_rational())) == pytest.approx(0.0, abs=1e-12)

    def test_exact_ra(self):
        f = BlaschkeProduct([0.3, 0.5j])
        assert approximant_error_direct(f, f.as_rational(), "ra") == pytest.approx(0.0, abs=1e-12)

    def test_pole_on_circle(self):
        with pytest.raises(DomainError):
            approximant_error_direct(Z2, RationalFunction([1], [-1, 1]))


class TestSolveRab:
    def test_analytic_oracle(self):
        res = solve_rab(Z2, 1, SolverConfig(n_starts=8))
        assert res.error == pytest.approx(SQRT3_2, abs=1e-6)
        assert abs(res.poles.points[0]) == pytest.approx(1 / math.sqrt(2), abs=1e-5)
        assert res.converged
        assert approximant_error_direct(Z2, res.approximant) == pytest.approx(res.error, abs=1e-8)
        assert approximant_error_direct(Z2, res.rab_approximant) == pytest.approx(res.error, abs=1e-8)
        assert res.error >= delay_bound(1, 2)

    def test_approximant_forms(self):
        f = BlaschkeProduct([0.4, -0.3 + 0.2j, 0.1j])
        res = solve_rab(f, 2, SolverConfig(n_starts=6))
        assert res.approximant.degree <= 2
        assert np.all(np.abs(res.approximant.poles()) > 1)
        assert np.all(np.abs(res.rab_approximant.poles()) < 1)
        assert res.rab_approximant.numerator.degree <= 1
        for r in (res.approximant, res.rab_approximant):
            assert approximant_error_direct(f, r) == pytest.approx(res.error, abs=1e-8)

    @pytest.mark.parametrize("zeros", [[0.5, -0.3j], [0.6, 0.2 + 0.5j, -0.4]])
    def test_brute_force(self, zeros):
        f = BlaschkeProduct(zeros)
        res = solve_rab(f, 1, SolverConfig(n_starts=8))
        grid = brute_force_single_pole(f)
        assert res.error <= grid + 1e-12
        assert grid - res.error <= 2e-4

    def test_short_circuit(self):
        f = BlaschkeProduct([0.5, 0.1j])
        res = solve_rab(f, 3)
        assert res.error == 0.0
        assert approximant_error_direct(f, res.approximant, "ra") == pytest.approx(0.0, abs=1e-12)
        assert approximant_error_direct(f, res.rab_approximant, "rab") == pytest.approx(0.0, abs=1e-12)

    def test_degree_zero(self):
        f = BlaschkeProduct([0.5, 0.0])
        res = solve_rab(f, 0)
        assert res.error == pytest.approx(1.0, abs=1e-12)

    def test_real_symmetric(self):
        f = BlaschkeProduct([0.5, 0.3 + 0.4j, 0.3 - 0.4j, 0.0])
        real = solve_rab(f, 3, SolverConfig(n_starts=6, real_symmetric=True))
        p = real.poles.points
        assert np.array_equal(np.sort(p), np.sort(np.conj(p)))
        cplx = solve_rab(f, 3, SolverConfig(n_starts=6))
        assert cplx.error <= real.error + 1e-9

    def test_seed_reproducible_error(self):
        f = BlaschkeProduct(np.zeros(10))
        e = [solve_rab(f, 2, SolverConfig(n_starts=6, seed=s)).error for s in (0, 1, 2)]
        assert max(e) - min(e) <= 1e-7

    def test_deterministic(self):
        f = BlaschkeProduct([0.5, -0.3j, 0.1])
        a = solve_rab(f, 2, SolverConfig(n_starts=4, seed=7))
        b = solve_rab(f, 2, SolverConfig(n_starts=4, seed=7))
        assert a.error == b.error and np.array_equal(a.poles.points, b.poles.points)

    def test_iteration_limit_reported(self):
        res = solve_rab(BlaschkeProduct(np.zeros(10)), 3, SolverConfig(n_starts=2, max_iterations=1))
        assert not res.converged
        assert 0 <= res.error <= 1

    def test_warm_start_degree_mismatch(self):
        with pytest.raises(DomainError):
            solve_rab(Z2, 1, SolverConfig(warm_starts=(PoleConfig([0.1, 0.2]),)))

    def test_no_starts(self):
        with pytest.raises(DomainError):
            solve_rab(Z2, 1, SolverConfig(n_starts=0))


class TestSweep:
    def test_monomial_sweep(self):
        N = 20
        f = BlaschkeProduct(np.zeros(N))
        res = solve_sweep(f, 8, SolverConfig(n_starts=4, real_symmetric=True))
        errs = [r.error for r in res]
        assert all(a > b for a, b in zip(errs, errs[1:]))
        for r in res:
            assert r.error >= delay_bound(r.n, N) - 1e-9

    def test_single_step_equals_solve(self):
        cfg = SolverConfig(n_starts=4)
        assert solve_sweep(Z2, 1, cfg)[0].error == pytest.approx(solve_rab(Z2, 1, cfg).error, abs=1e-12)

    def test_warm_start_never_worse(self):
        f = BlaschkeProduct([0.5, 0.5, 0.5, -0.2j, 0.0])
        res = solve_sweep(f, 3, SolverConfig(n_starts=3))
        errs = [r.error for r in res]
        assert all(b <= a + 1e-9 for a, b in zip(errs, errs[1:]))
