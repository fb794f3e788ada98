"""Best rational approximation of a Blaschke product by pole optimization.

For ``f`` a Blaschke product of degree ``N`` and a candidate denominator
with roots ``zeta_1..zeta_n`` in the disk (equivalently the Blaschke product
``b_n`` with those zeros), the squared error of the best degree-n rational
approximant in H2 is

    J(b_n) = sum_{k<0} |a_k|**2,   a_k the Fourier coefficients of f^sharp b_n,

and ``f^sharp = conj(f) = 1/f`` on the circle. The numerator is then
recovered in closed form. The solver minimizes ``J`` over pole positions
with a multistart quasi-Newton descent driven by the exact gradient.

Two conventions appear. The *analytic* one approximates ``f`` by
``P_n / q~_n`` (poles outside the disk). The *anti-analytic* one
approximates ``h = f^sharp - conj(f(0))`` by ``p_{n-1} / q_n`` (poles inside
the disk). Both share the same error ``sqrt(J)``; the analytic approximant is
``f(0) + r^sharp`` for ``r`` the anti-analytic one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize

from .blaschke import BlaschkeProduct
from .bounds import alpha0, coeff_tail_bound, s_star
from .errors import DomainError, GridCapError, NumericalError
from .laurent import GRID_CAP, circle_points, grid_size_for_tail
from .rational import Polynomial, RationalFunction, reciprocal_polynomial, sharp

__all__ = [
    "PoleConfig",
    "SolverConfig",
    "SolveResult",
    "criterion",
    "criterion_forms",
    "optimal_numerator",
    "approximant_error_direct",
    "solve_rab",
    "solve_sweep",
]

PROBE_STEP = 1e-5
MAX_MINIMA = 8
AUGMENT_RANDOM = 4
PARSEVAL_TOL = 1e-10
CERTIFY_ROUNDS = 4
DESCENT_CAP = 1 << 18
SPLIT_ANGLE = 0.01


# ------------------------------------------------------------------ types

@dataclass(frozen=True, eq=False)
class PoleConfig:
    """Zeros ``zeta_1..zeta_n`` of ``b_n`` (poles of the anti-analytic approximant)."""

    points: np.ndarray
    real_symmetric: bool = False

    def __post_init__(self):
        p = np.atleast_1d(np.asarray(self.points, dtype=complex)).ravel().copy()
        if p.size and np.max(np.abs(p)) >= 1.0:
            raise DomainError("poles must lie in the open unit disk")
        if self.real_symmetric and not np.array_equal(np.sort(p), np.sort(np.conj(p))):
            raise DomainError("real-symmetric configuration is not closed under conjugation")
        p.setflags(write=False)
        object.__setattr__(self, "points", p)

    @property
    def n(self) -> int:
        return int(self.points.size)

    def blaschke(self) -> BlaschkeProduct:
        return BlaschkeProduct(self.points)


@dataclass(frozen=True)
class SolverConfig:
    """Multistart settings.

    Attributes
    ----------
    n_starts : int
        Fresh random starts, on top of any warm starts.
    seed : int
        Start ``i`` at degree ``n`` draws from ``default_rng([seed, n, i])``.
    max_iterations : int
        Quasi-Newton iteration limit per start.
    tol : float
        Certification threshold: no coordinate probe may lower the error by
        more than ``10 * tol``.
    grid_tol : float
        Certified coefficient mass allowed outside the DFT window.
    real_symmetric : bool
        Restrict to conjugation-closed pole sets.
    warm_starts : tuple of PoleConfig
        Extra initial configurations (degree must match).
    grid_cap : int
        Largest admissible boundary grid.
    """

    n_starts: int = 32
    seed: int = 0
    max_iterations: int = 2000
    tol: float = 1e-10
    grid_tol: float = 1e-12
    real_symmetric: bool = False
    warm_starts: tuple = ()
    grid_cap: int = GRID_CAP

    def __post_init__(self):
        if self.n_starts < 0 or self.max_iterations < 1:
            raise DomainError("counts must be positive")
        if self.tol <= 0 or self.grid_tol <= 0:
            raise DomainError("tolerances must be positive")
        object.__setattr__(self, "warm_starts", tuple(self.warm_starts))


@dataclass(frozen=True, eq=False)
class SolveResult:
    """Outcome of :func:`solve_rab`.

    ``approximant`` is the analytic best approximant of ``f`` and
    ``rab_approximant`` the anti-analytic one of ``f^sharp - conj(f(0))``.
    ``minima`` lists distinct local minima as ``(error, PoleConfig)``,
    best first.
    """

    poles: PoleConfig
    error: float
    approximant: RationalFunction
    rab_approximant: RationalFunction
    starts_used: int
    best_start_index: int
    iterations: int
    grid_size: int
    converged: bool
    n: int = 0
    minima: tuple = field(default=())


# --------------------------------------------------------- criterion core

def _tail_mass_sum(degree: int, lam: float, K: int) -> float:
    """Bound on ``sum_{k>=K} T(k)`` where ``T(k)`` bounds the coefficient mass beyond ``k``."""
    if degree == 0:
        return 0.0
    if lam == 0.0:
        return 0.0 if K > degree else math.inf
    if K <= 0 or degree / K >= alpha0(lam) * (1.0 - 1e-12):
        return math.inf
    alpha = degree / K
    s = s_star(lam, alpha)
    return coeff_tail_bound(degree, lam, alpha, K) * s * s / (s * s - 1.0)


class _Criterion:
    """Evaluates ``J`` and its gradient for a fixed ``f`` on adaptive grids."""

    def __init__(self, f: BlaschkeProduct, grid_tol: float, cap: int):
        self.f = f
        self.grid_tol = grid_tol
        self.cap = cap
        self._cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        self.M = 2

    def samples(self, M: int) -> tuple[np.ndarray, np.ndarray]:
        if M not in self._cache:
            if len(self._cache) >= 6:
                self._cache.pop(max(self._cache))
            z = circle_points(M)
            self._cache[M] = (z, np.conj(self.f.evaluate(z)))
        return self._cache[M]

    def required_grid(self, poles: np.ndarray, clamp: bool = True) -> int:
        """Grid making the certified mass of ``f^sharp b_n`` beyond ``M/2`` at most ``grid_tol``.

        With ``clamp`` the cap is returned instead of raising.
        """
        n, N = poles.size, self.f.degree
        lam_b = float(np.max(np.abs(poles))) if n else 0.0
        lam_f = self.f.max_modulus

        def tail(K: int) -> float:
            return _tail_mass_sum(n, lam_b, K) + _tail_mass_sum(N, lam_f, K)

        try:
            return grid_size_for_tail(tail, self.grid_tol, min_size=2 * (n + N + 1), cap=self.cap)
        except GridCapError:
            if not clamp:
                raise
            return self.cap

    def evaluate(self, poles: np.ndarray, *, grad: bool = True, M: int | None = None):
        """Return ``(J, dJ/dx, dJ/dy, J_alt)`` with ``J_alt = 1 - sum_{k>=0}|a_k|**2``."""
        if M is None:
            M = self.M = self.required_grid(poles)
        z, cf = self.samples(M)
        g = cf.copy()
        dens = []
        for w in poles:
            den = 1.0 - np.conj(w) * z
            g *= (z - w) / den
            dens.append(den)
        a = np.fft.fft(g) / M
        half = M // 2
        mass = np.abs(a) ** 2
        J = float(np.sum(mass[half:]))
        J_alt = 1.0 - float(np.sum(mass[:half]))
        if not grad:
            return J, None, None, J_alt
        bins = np.zeros(M, dtype=complex)
        bins[half:] = a[half:]
        r = np.fft.ifft(bins) * M
        wgt = np.conj(r) * g
        jx = np.empty(poles.size)
        jy = np.empty(poles.size)
        for i, (w, den) in enumerate(zip(poles, dens)):
            d_zeta = -np.mean(wgt / (z - w))
            d_zbar = np.mean(wgt * z / den)
            jx[i] = 2.0 * (d_zeta + d_zbar).real
            jy[i] = -2.0 * (d_zeta - d_zbar).imag
        return J, jx, jy, J_alt


def criterion_forms(f: BlaschkeProduct, poles: PoleConfig, grid_tol: float = 1e-12) -> tuple[float, float]:
    """Both Parseval forms of the squared criterion: ``(sum_{k<0}|a_k|^2, 1 - sum_{k>=0}|a_k|^2)``."""
    ev = _Criterion(f, grid_tol, GRID_CAP)
    M = ev.required_grid(poles.points, clamp=False)
    J, _, _, J_alt = ev.evaluate(poles.points, grad=False, M=M)
    return J, J_alt


def criterion(f: BlaschkeProduct, poles: PoleConfig, grid_tol: float = 1e-12) -> float:
    """``||P_-(f^sharp b_n)||_2`` for ``b_n`` with zeros ``poles`` and unit constant.

    Raises
    ------
    GridCapError
        If a pole or zero is too close to the circle for ``grid_tol``.
    NumericalError
        If the two Parseval forms disagree by more than ``1e-10``.
    """
    if f.degree < 1:
        raise DomainError("f must have degree >= 1")
    J, J_alt = criterion_forms(f, poles, grid_tol)
    if abs(J - J_alt) > PARSEVAL_TOL:
        raise NumericalError(f"Parseval forms disagree: {J!r} vs {J_alt!r}")
    return math.sqrt(max(J, 0.0))


# ---------------------------------------------------------------- charts

def _to_chart(zeta: np.ndarray) -> np.ndarray:
    return zeta / np.sqrt(1.0 - np.abs(zeta) ** 2)


class _Chart:
    """Unconstrained coordinates for pole sets; ``u -> u / sqrt(1 + |u|^2)`` per pole.

    In symmetric mode the first ``pairs`` complex poles come with their
    conjugates and the rest are real (``t -> t / sqrt(1 + t^2)``).
    """

    def __init__(self, n: int, symmetric: bool, pairs: int = 0):
        self.n = n
        self.symmetric = symmetric
        self.pairs = pairs if symmetric else 0
        self.reals = n - 2 * self.pairs if symmetric else 0
        self.dim = 2 * self.pairs + self.reals if symmetric else 2 * n

    def _complex(self, x: np.ndarray):
        u = x[0::2] + 1j * x[1::2]
        c = 1.0 / np.sqrt(1.0 + np.abs(u) ** 2)
        return u, c

    def poles(self, x: np.ndarray) -> np.ndarray:
        if not self.symmetric:
            u, c = self._complex(x)
            return u * c
        u, c = self._complex(x[: 2 * self.pairs])
        t = x[2 * self.pairs:]
        zp = u * c
        return np.concatenate([zp, np.conj(zp), t / np.sqrt(1.0 + t * t)]).astype(complex)

    def grad(self, x: np.ndarray, jx: np.ndarray, jy: np.ndarray) -> np.ndarray:
        if self.symmetric:
            p = self.pairs
            gx = jx[:p] + jx[p:2 * p]
            gy = jy[:p] - jy[p:2 * p]
            xc = x[: 2 * p]
        else:
            gx, gy, xc = jx, jy, x
        u, c = self._complex(xc)
        c3 = c ** 3
        dz1 = c - u * xc[0::2] * c3
        dz2 = 1j * c - u * xc[1::2] * c3
        out = np.empty(self.dim)
        out[0:2 * gx.size:2] = gx * dz1.real + gy * dz1.imag
        out[1:2 * gx.size:2] = gx * dz2.real + gy * dz2.imag
        if self.symmetric and self.reals:
            t = x[2 * self.pairs:]
            out[2 * self.pairs:] = jx[2 * self.pairs:] * (1.0 + t * t) ** -1.5
        return out

    def coords(self, poles: np.ndarray) -> np.ndarray:
        if not self.symmetric:
            u = _to_chart(poles)
            return np.column_stack([u.real, u.imag]).ravel()
        zp = poles[: self.pairs]
        u = _to_chart(zp)
        t = _to_chart(poles[2 * self.pairs:].real.astype(complex)).real
        return np.concatenate([np.column_stack([u.real, u.imag]).ravel(), t])

    @staticmethod
    def from_symmetric_poles(poles: np.ndarray, n: int) -> tuple["_Chart", np.ndarray]:
        """Split a conjugation-closed set into pair representatives and reals."""
        tol = 1e-12
        upper = sorted((p for p in poles if p.imag > tol), key=lambda p: (p.real, p.imag))
        reals = [p.real for p in poles if abs(p.imag) <= tol]
        chart = _Chart(n, True, len(upper))
        ordered = np.array(upper + [np.conj(p) for p in upper] + reals, dtype=complex)
        return chart, chart.coords(ordered)


# ------------------------------------------------------------- numerator

def optimal_numerator(
    f_sharp: Callable[[np.ndarray], np.ndarray],
    q: Polynomial,
    n: int,
    *,
    grid_size: int | None = None,
    cap: int = GRID_CAP,
) -> Polynomial:
    """Best numerator ``p_{n-1} = q~_n P_+(f_sharp q / q~_n)`` for the denominator ``q``.

    ``f_sharp`` is anything callable on circle points (a
    :class:`~blaschke_h2.rational.RationalFunction`, or
    :meth:`BlaschkeProduct.sharp_values`). Its mean on the circle, the value
    at infinity, is removed first, so a constant offset is tolerated.

    Raises
    ------
    NumericalError
        If the recovered coefficients of index ``n..2n`` are not negligible.
    """
    if q.degree > n or q.is_zero:
        raise DomainError(f"need a nonzero q with deg q <= n, got deg {q.degree} and n = {n}")
    if q.degree > 0 and np.max(np.abs(q.roots())) >= 1.0:
        raise DomainError("q must have all roots in the open disk")
    if n == 0:
        return Polynomial([0.0])
    qt = reciprocal_polynomial(q, n)
    M = 64
    while M < max(grid_size or 0, 8 * (n + 1)):
        M *= 2
    while True:
        z = circle_points(M)
        hs = np.asarray(f_sharp(z), dtype=complex) * np.ones(M)
        a = np.fft.fft((hs - np.mean(hs)) * q(z) / qt(z)) / M
        if np.max(np.abs(a[M // 4: 3 * M // 4])) <= 1e-15 or M >= cap:
            break
        M *= 2
    c = a[: 2 * n + 1]
    qt_c = np.zeros(n + 1, dtype=complex)
    qt_c[: qt.coeffs.size] = qt.coeffs
    p = np.convolve(qt_c, c)[: 2 * n + 1]
    if np.max(np.abs(p[n:])) > 1e-9:
        raise NumericalError(f"numerator degree certificate failed: residual {np.max(np.abs(p[n:])):.3g}")
    return Polynomial(p[:n])


def _assemble(f: BlaschkeProduct, poles: np.ndarray, M: int) -> tuple[RationalFunction, RationalFunction]:
    n = poles.size
    q = Polynomial.from_roots(poles)
    p = optimal_numerator(f.sharp_values, q, n, grid_size=M)
    r_b = RationalFunction(p, q)
    rs = sharp(r_b)
    f0 = f.value_at_zero
    r_a = RationalFunction(f0 * rs.denominator + rs.numerator, rs.denominator)
    return r_a, r_b


def approximant_error_direct(f: BlaschkeProduct, r: RationalFunction, form: str | None = None) -> float:
    """Error of ``r`` measured on the circle, independent of the criterion.

    ``form="ra"`` gives ``||f - r||_2``. ``form="rab"`` gives
    ``||f^sharp - conj(f(0)) - r||_2``, the anti-analytic convention. By
    default the form is read from the poles of ``r``: all outside the disk
    (or none) means ``"ra"``, all inside means ``"rab"``.
    """
    poles = r.poles()
    mod = np.abs(poles)
    if np.any(np.abs(mod - 1.0) < 1e-9):
        raise DomainError("approximant has a pole on the unit circle")
    if form is None:
        if np.all(mod > 1.0):
            form = "ra"
        elif np.all(mod < 1.0):
            form = "rab"
        else:
            raise DomainError("approximant has poles on both sides of the circle")
    if form not in ("ra", "rab"):
        raise DomainError(f"unknown form {form!r}")
    conj_f0 = np.conj(f.value_at_zero)

    def sq_error(M: int) -> float:
        z = circle_points(M)
        target = f.evaluate(z) if form == "ra" else f.sharp_values(z) - conj_f0
        return float(np.mean(np.abs(target - r(z)) ** 2))

    M = 256
    while M < 4 * (f.degree + r.degree + 1):
        M *= 2
    prev = sq_error(M)
    while True:
        M *= 2
        cur = sq_error(M)
        if abs(cur - prev) <= 1e-15 * max(1.0, cur) or M >= GRID_CAP:
            return math.sqrt(cur)
        prev = cur


# ------------------------------------------------------------------ solver

def _fresh_start(rng: np.random.Generator, n: int, symmetric: bool, pairs: int) -> np.ndarray:
    if not symmetric:
        rad = np.sqrt(rng.uniform(0.0, 0.98, n))
        return rad * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n))
    rad = np.sqrt(rng.uniform(0.0, 0.98, pairs))
    zp = rad * np.exp(1j * np.pi * rng.uniform(0.0, 1.0, pairs))
    m = n - 2 * pairs
    reals = np.sqrt(rng.uniform(0.0, 0.98, m)) * rng.choice([-1.0, 1.0], m)
    return np.concatenate([zp, np.conj(zp), reals]).astype(complex)


class _Run:
    """One local descent plus probe certification."""

    def __init__(self, ev: _Criterion, cfg: SolverConfig):
        self.ev = ev
        self.cfg = cfg

    def value(self, chart: _Chart, x: np.ndarray) -> float:
        J, *_ = self.ev.evaluate(chart.poles(x), grad=False)
        return math.sqrt(max(J, 0.0))

    def certify(self, chart: _Chart, x: np.ndarray, e0: float) -> tuple[bool, np.ndarray, float]:
        threshold = 10.0 * self.cfg.tol
        best_x, best_e = x, e0
        for i in range(chart.dim):
            for sgn in (1.0, -1.0):
                y = x.copy()
                y[i] += sgn * PROBE_STEP
                e = self.value(chart, y)
                if e < best_e:
                    best_x, best_e = y, e
        return e0 - best_e < threshold, best_x, best_e

    def descend(self, chart: _Chart, x0: np.ndarray) -> tuple[np.ndarray, float, int, bool]:
        ev = self.ev

        def fun(x):
            J, jx, jy, _ = ev.evaluate(chart.poles(x))
            return J, chart.grad(x, jx, jy)

        x, iters = x0, 0
        for _ in range(CERTIFY_ROUNDS):
            budget = self.cfg.max_iterations - iters
            if budget <= 0:
                break
            res = minimize(fun, x, jac=True, method="BFGS", options={"maxiter": budget, "gtol": 1e-11})
            x, iters = res.x, iters + int(res.nit)
            e = self.value(chart, x)
            ok, y, e_probe = self.certify(chart, x, e)
            if ok:
                return x, e, iters, True
            x = y
        return x, self.value(chart, x), iters, False


def _dedupe_minima(found: list) -> tuple:
    """Distinct minima by error value, best first, at most ``MAX_MINIMA``."""
    out = []
    for err, idx, cfg in sorted(found, key=lambda t: (t[0], t[1])):
        if all(abs(err - e) > 1e-9 * max(1.0, e) for e, _ in out):
            out.append((err, cfg))
        if len(out) == MAX_MINIMA:
            break
    return tuple(out)


def _short_circuit(f: BlaschkeProduct, n: int) -> SolveResult:
    """``n >= deg f``: ``f`` itself is exact."""
    fs = sharp(f.as_rational())
    shift = Polynomial([np.conj(f.value_at_zero)]) * fs.denominator
    r_b = RationalFunction(fs.numerator - shift, fs.denominator)
    poles = PoleConfig(f.zeros)
    return SolveResult(poles, 0.0, f.as_rational(), r_b, 0, -1, 0, 0, True, n, ((0.0, poles),))


def solve_rab(f: BlaschkeProduct, n: int, cfg: SolverConfig = SolverConfig()) -> SolveResult:
    """Best degree-``n`` rational approximation of ``f`` by multistart pole optimization.

    Each start runs BFGS on the squared criterion with its exact gradient
    and is certified by ``2 * dim`` coordinate probes of size ``1e-5``.
    The best certified (else best overall) local minimum wins; ties go to
    the lower start index.

    Returns
    -------
    SolveResult
        ``converged`` is false when no start passed certification.
    """
    if f.degree < 1:
        raise DomainError("f must have degree >= 1")
    if n < 0:
        raise DomainError("n must be non-negative")
    if n >= f.degree:
        return _short_circuit(f, n)
    ev = _Criterion(f, cfg.grid_tol, cfg.grid_cap)
    if n == 0:
        J, *_ = ev.evaluate(np.zeros(0, dtype=complex), grad=False)
        c0 = f.value_at_zero
        r_a = RationalFunction.constant(c0)
        r_b = RationalFunction(Polynomial([0.0]), Polynomial([1.0]))
        poles = PoleConfig(np.zeros(0))
        err = math.sqrt(max(J, 0.0))
        return SolveResult(poles, err, r_a, r_b, 1, 0, 0, ev.M, True, 0, ((err, poles),))

    sym = cfg.real_symmetric
    starts: list[tuple[_Chart, np.ndarray]] = []
    for w in cfg.warm_starts:
        pts = np.asarray(w.points, dtype=complex)
        if pts.size != n:
            raise DomainError(f"warm start has {pts.size} poles, expected {n}")
        if sym:
            starts.append(_Chart.from_symmetric_poles(pts, n))
        else:
            chart = _Chart(n, False)
            starts.append((chart, chart.coords(pts)))
    for i in range(cfg.n_starts):
        idx = len(starts)
        rng = np.random.default_rng([cfg.seed, n, idx])
        pairs = (i % (n // 2 + 1)) if sym else 0
        chart = _Chart(n, sym, pairs)
        starts.append((chart, chart.coords(_fresh_start(rng, n, sym, pairs))))
    if not starts:
        raise DomainError("no starting configuration: n_starts is 0 and no warm starts given")

    # descent runs on a reduced cap; line searches may probe poles near the circle
    run = _Run(_Criterion(f, cfg.grid_tol, min(cfg.grid_cap, DESCENT_CAP)), cfg)
    found, total_iters = [], 0
    best = None
    for idx, (chart, x0) in enumerate(starts):
        x, err, iters, ok = run.descend(chart, x0)
        total_iters += iters
        pts = chart.poles(x)
        pc = PoleConfig(pts, sym)
        found.append((err, idx, pc))
        key = (not ok, err)
        if best is None or key < best[0]:
            best = (key, idx, pc, ok)
    _, best_idx, best_pc, ok = best

    # final value on a grid certified for the chosen poles
    M = ev.required_grid(best_pc.points)
    J, _, _, J_alt = ev.evaluate(best_pc.points, grad=False, M=M)
    if abs(J - J_alt) > PARSEVAL_TOL:
        raise NumericalError(f"Parseval forms disagree: {J!r} vs {J_alt!r}")
    error = math.sqrt(max(J, 0.0))
    r_a, r_b = _assemble(f, best_pc.points, M)
    return SolveResult(
        poles=best_pc,
        error=error,
        approximant=r_a,
        rab_approximant=r_b,
        starts_used=len(starts),
        best_start_index=best_idx,
        iterations=total_iters,
        grid_size=M,
        converged=ok,
        n=n,
        minima=_dedupe_minima(found),
    )


def _augment(minima: Sequence, n: int, cfg: SolverConfig) -> list[PoleConfig]:
    """Degree-(n-1) minima with one more pole at 0 and at random points."""
    out = []
    for j, (_, pc) in enumerate(minima[:MAX_MINIMA]):
        base = np.asarray(pc.points, dtype=complex)
        out.append(PoleConfig(np.append(base, 0.0), cfg.real_symmetric))
        rng = np.random.default_rng([cfg.seed, n, 1_000_000 + j])
        for _ in range(AUGMENT_RANDOM):
            rad = math.sqrt(rng.uniform(0.0, 0.98))
            extra = rad * rng.choice([-1.0, 1.0]) if cfg.real_symmetric else rad * np.exp(2j * np.pi * rng.uniform())
            out.append(PoleConfig(np.append(base, extra), cfg.real_symmetric))
        if cfg.real_symmetric:
            # the chart fixes the pair count, so also split each real pole into a close pair
            for i in np.flatnonzero(base.imag == 0.0):
                w = base[i] * np.exp(SPLIT_ANGLE * 1j)
                out.append(PoleConfig(np.concatenate([np.delete(base, i), [w, np.conj(w)]]), True))
    return out


def solve_sweep(f: BlaschkeProduct, n_max: int, cfg: SolverConfig = SolverConfig()) -> list[SolveResult]:
    """Solve ``n = 1..n_max``, warm-starting each degree from the previous minima.

    A degree-(n-1) minimum with an extra pole is feasible at degree ``n``
    with the same or lower error, so errors should not increase. If one does
    by more than ``1e-9``, the degree is rerun once with twice the fresh
    starts and the better result kept.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    results: list[SolveResult] = []
    prev: SolveResult | None = None
    for n in range(1, n_max + 1):
        warm = tuple(w for w in cfg.warm_starts if w.n == n)
        if prev is not None:
            warm += tuple(_augment(prev.minima, n, cfg))
        res = solve_rab(f, n, replace(cfg, warm_starts=warm))
        if prev is not None and res.error > prev.error + 1e-9:
            again = solve_rab(f, n, replace(cfg, warm_starts=warm, n_starts=2 * max(cfg.n_starts, 1)))
            if again.error < res.error:
                res = again
        results.append(res)
        prev = res
    return results
