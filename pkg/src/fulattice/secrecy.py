"""Secrecy function and secrecy gain of Construction A lattices."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import theta
from .gf2code import WeightEnumerator, is_formally_self_dual, macwilliams

INV_SQRT2 = 1 / math.sqrt(2)
GRID_POINTS = 1024
GOLDEN_TOL = 1e-10
VERIFY_TOL = 1e-6
TAU_BRACKET = (1e-3, 1e3)

_INV_PHI = (math.sqrt(5) - 1) / 2


class SecrecyError(ValueError):
    pass


class Method(enum.Enum):
    GRID_GOLDEN = "grid_golden"
    GLEASON_CONDITION = "gleason_condition"
    ANALYTIC_EXAMPLE = "analytic_example"


@dataclass(frozen=True)
class SecrecyReport:
    n: int
    xi: float
    weak_gain: float
    t_star: float
    tau_star: float
    conjecture_verified: bool
    method: Method
    sign_changes: int

    @property
    def xi_rounded(self) -> float:
        return round(self.xi, 3)


def _check_t(t) -> None:
    arr = np.asarray(t)
    if not np.all((arr > 0) & (arr < 1)):
        raise SecrecyError("t must lie in the open interval (0, 1)")


def f_c(we: WeightEnumerator, t):
    """W_C(sqrt(1+t), sqrt(1-t)); accepts scalars or arrays."""
    _check_t(t)
    t = np.asarray(t, dtype=float)
    n = we.n
    total = np.zeros_like(t)
    for w, a in we.support():
        total = total + float(a) * (1 + t) ** ((n - w) / 2) * (1 - t) ** (w / 2)
    return total if total.ndim else float(total)


def _f_c_prime_terms(we: WeightEnumerator, t: np.ndarray):
    n = we.n
    up = np.zeros_like(t)
    down = np.zeros_like(t)
    for w, a in we.support():
        p, q = (n - w) / 2, w / 2
        if p:
            up = up + float(a) * p * (1 + t) ** (p - 1) * (1 - t) ** q
        if q:
            down = down + float(a) * q * (1 + t) ** p * (1 - t) ** (q - 1)
    return up, down


def f_c_prime(we: WeightEnumerator, t):
    """Term-wise analytic derivative of f_c."""
    _check_t(t)
    t = np.asarray(t, dtype=float)
    up, down = _f_c_prime_terms(we, t)
    out = up - down
    return out if out.ndim else float(out)


def t_of_tau(tau: float) -> float:
    """theta4^2 / theta3^2 at i*tau; increasing from 0 to 1."""
    return (theta.theta4(tau) / theta.theta3(tau)) ** 2


def tau_of_t(t: float) -> float:
    """Inverse of t_of_tau by bisection in log(tau)."""
    _check_t(t)
    lo, hi = (math.log(b) for b in TAU_BRACKET)
    if not t_of_tau(math.exp(lo)) <= t <= t_of_tau(math.exp(hi)):
        raise ArithmeticError(f"t={t} not bracketed on tau in {TAU_BRACKET}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if t_of_tau(math.exp(mid)) < t:
            lo = mid
        else:
            hi = mid
    return math.exp(0.5 * (lo + hi))


def volume_scale(n: int, k: int) -> float:
    """nu with vol(Lambda_A(C)) = nu^n."""
    return 2 ** ((n - 2 * k) / (2 * n))


def secrecy_function(we: WeightEnumerator, k: int, tau: float) -> float:
    """Theta_{nu Z^n}(i tau) / Theta_{Lambda_A(C)}(i tau).

    Below the theta cutoff the dual relation Xi_L(tau) = Xi_{L*}(1/tau) is
    used, with the dual enumerator from the MacWilliams transform.
    """
    if not tau > 0:
        raise theta.ThetaDomainError(f"tau must be positive, got {tau}")
    if tau < theta.MIN_TAU:
        return secrecy_function(macwilliams(we, k), we.n - k, 1 / tau)
    n = we.n
    nu = volume_scale(n, k)
    return theta.theta_zn(tau, n, nu) / theta.theta_construction_a(we, tau)


def secrecy_function_fsd(we: WeightEnumerator, tau: float) -> float:
    """2^(n/2) / f_c(t(tau)); valid for formally self-dual enumerators."""
    return 2 ** (we.n / 2) / f_c(we, t_of_tau(tau))


def golden_section(f, a: float, b: float, tol: float = GOLDEN_TOL) -> float:
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def t_grid(points: int = GRID_POINTS) -> np.ndarray:
    return np.arange(1, points + 1) / (points + 1)


def count_sign_changes(we: WeightEnumerator, grid: np.ndarray | None = None) -> int:
    """Sign changes of f_c' on the grid; values within rounding of zero are skipped."""
    if grid is None:
        grid = t_grid()
    up, down = _f_c_prime_terms(we, grid)
    d = up - down
    noise = 1e-12 * (up + down)
    signs = np.sign(d)[np.abs(d) > noise]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def _is_flat(values: np.ndarray) -> bool:
    return float(values.max() - values.min()) <= 1e-12 * float(values.max())


def secrecy_gain(we: WeightEnumerator) -> SecrecyReport:
    """Minimise f_c on (0, 1): grid scan, then golden-section refinement."""
    if not is_formally_self_dual(we):
        raise SecrecyError(
            "secrecy-gain reduction requires a formally self-dual enumerator"
        )
    n = we.n
    scale = 2 ** (n / 2)
    grid = t_grid()
    values = f_c(we, grid)
    weak = scale / f_c(we, INV_SQRT2)
    changes = count_sign_changes(we, grid)

    if _is_flat(values):
        # f_c constant: every t is a minimiser, so there is no sign change to
        # verify and the gain equals the weak gain exactly
        return SecrecyReport(n, weak, weak, INV_SQRT2, 1.0, False, Method.ANALYTIC_EXAMPLE, 0)

    i = int(np.argmin(values))
    lo = grid[i - 1] if i > 0 else grid[0] / 2
    hi = grid[i + 1] if i + 1 < len(grid) else (1 + grid[-1]) / 2
    t_star = golden_section(lambda t: f_c(we, t), float(lo), float(hi))
    if f_c(we, t_star) > values[i]:
        t_star = float(grid[i])
    xi = scale / f_c(we, t_star)
    verified = abs(t_star - INV_SQRT2) <= VERIFY_TOL and changes == 1

    method = Method.GRID_GOLDEN
    if we.is_even and n >= 8:
        from .gleason import gleason_coefficients, theorem4_condition

        if theorem4_condition(gleason_coefficients(we)) > 0:
            method = Method.GLEASON_CONDITION
    return SecrecyReport(n, xi, weak, t_star, tau_of_t(t_star), verified, method, changes)


def default_tau_grid(points: int = 41, lo: float = 0.1, hi: float = 10.0) -> np.ndarray:
    return np.exp(np.linspace(math.log(lo), math.log(hi), points))


def verify_symmetry(we: WeightEnumerator, k: int, taus=None) -> float:
    """Largest deviation from the duality and symmetry-point identities.

    Always checks Xi_L(tau) = Xi_{L*}(1/tau) with L* from the dual code; for
    formally self-dual input also checks Xi(tau) = Xi(1/tau) around the
    symmetry point nu^-2 (nu = 1 there).
    """
    if taus is None:
        taus = default_tau_grid()
    dual = macwilliams(we, k)
    n = we.n
    worst = 0.0
    fsd = 2 * k == n and dual == we
    nu2 = volume_scale(n, k) ** 2
    for tau in taus:
        tau = float(tau)
        worst = max(
            worst,
            abs(secrecy_function(we, k, tau) - secrecy_function(dual, n - k, 1 / tau)),
        )
        if fsd:
            worst = max(
                worst,
                abs(
                    secrecy_function(we, k, tau / nu2)
                    - secrecy_function(we, k, 1 / (nu2 * tau))
                ),
            )
    return worst


def weak_secrecy_gain(we: WeightEnumerator, k: int) -> float:
    """Xi at the candidate symmetry point nu^-2."""
    nu = volume_scale(we.n, k)
    return secrecy_function(we, k, nu**-2)

