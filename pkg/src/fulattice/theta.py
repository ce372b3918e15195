"""Jacobi theta functions on the imaginary axis and Construction A theta series.

Arguments are tau > 0 with z = i*tau, so the nome is q = exp(-pi*tau).
"""
from __future__ import annotations

import math

from .gf2code import BinaryCode, WeightEnumerator

MIN_TAU = 1e-3
REL_CUTOFF = 1e-17
MAX_DIRECT_DIM = 10


class ThetaDomainError(ValueError):
    pass


def _check_tau(tau: float) -> None:
    if not tau > 0:
        raise ThetaDomainError(f"tau must be positive, got {tau}")
    if tau < MIN_TAU:
        raise ThetaDomainError(
            f"tau={tau} below {MIN_TAU}: use modular reflection Xi(tau) = Xi(1/tau)"
        )


def _series3(tau: float) -> float:
    total = 1.0
    m = 1
    while True:
        term = 2.0 * math.exp(-math.pi * tau * m * m)
        total += term
        if term <= REL_CUTOFF * total:
            return total
        m += 1


def _series4(tau: float) -> float:
    total = 1.0
    m = 1
    while True:
        term = 2.0 * math.exp(-math.pi * tau * m * m)
        total += -term if m & 1 else term
        if term <= REL_CUTOFF * abs(total):
            return total
        m += 1


def _series2(tau: float) -> float:
    total = 0.0
    m = 0
    while True:
        term = 2.0 * math.exp(-math.pi * tau * (m + 0.5) ** 2)
        total += term
        if term <= REL_CUTOFF * total:
            return total
        m += 1


# For tau < 1 the series are evaluated at 1/tau via the modular reflection
# theta3(tau) = theta3(1/tau)/sqrt(tau), theta4(tau) = theta2(1/tau)/sqrt(tau),
# theta2(tau) = theta4(1/tau)/sqrt(tau); theta4 is a cancelling series there.


def theta3(tau: float) -> float:
    _check_tau(tau)
    if tau < 1:
        return _series3(1 / tau) / math.sqrt(tau)
    return _series3(tau)


def theta4(tau: float) -> float:
    _check_tau(tau)
    if tau < 1:
        return _series2(1 / tau) / math.sqrt(tau)
    return _series4(tau)


def theta2(tau: float) -> float:
    _check_tau(tau)
    if tau < 1:
        return _series4(1 / tau) / math.sqrt(tau)
    return _series2(tau)


def theta_zn(tau: float, n: int, nu: float = 1.0) -> float:
    """Theta series of the scaled integer lattice nu*Z^n."""
    if n < 1:
        raise ValueError("dimension must be positive")
    return theta3(nu * nu * tau) ** n


def _eval_enumerator(we: WeightEnumerator, x: float, y: float) -> float:
    n = we.n
    return math.fsum(float(a) * x ** (n - w) * y**w for w, a in we.support())


def theta_construction_a(we: WeightEnumerator, tau: float) -> float:
    """W_C(theta3(2 tau), theta2(2 tau))."""
    return _eval_enumerator(we, theta3(2 * tau), theta2(2 * tau))


def theta_construction_a_fsd(we: WeightEnumerator, tau: float) -> float:
    """2^(-n/2) W_C(sqrt(th3^2 + th4^2), sqrt(th3^2 - th4^2)) for fsd codes."""
    t3 = theta3(tau) ** 2
    t4 = theta4(tau) ** 2
    diff = t3 - t4
    if diff < 0:
        raise ArithmeticError("theta3^2 < theta4^2: theta evaluation is broken")
    return _eval_enumerator(we, math.sqrt(t3 + t4), math.sqrt(diff)) / 2 ** (we.n / 2)


def construction_a_volume(n: int, k: int) -> float:
    return 2 ** ((n - 2 * k) / 2)


def _zn_shell_counts(n: int, max_norm: int) -> list[int]:
    """r_n(m): number of integer vectors of squared norm m, m <= max_norm."""
    one = [0] * (max_norm + 1)
    for m in range(0, math.isqrt(max_norm) + 1):
        one[m * m] += 1 if m == 0 else 2
    counts = [1] + [0] * max_norm
    for _ in range(n):
        new = [0] * (max_norm + 1)
        for i, c in enumerate(counts):
            if c:
                for j, d in enumerate(one[: max_norm + 1 - i]):
                    if d:
                        new[i + j] += c * d
        counts = new
    return counts


def default_radius(n: int, tau: float, tail: float = 1e-12) -> float:
    """Radius R with sum over ||lambda|| > R of exp(-pi tau ||lambda||^2) < tail.

    Construction A lattices sit inside Z^n/sqrt(2), so the tail is bounded
    shell by shell with the exact shell sizes of Z^n.
    """
    # past the horizon even the crude bound (2 sqrt(s) + 1)^n e^(-pi tau s/2) is negligible
    horizon = 8
    while n * math.log(2 * math.sqrt(horizon) + 1) - math.pi * tau * horizon / 2 > math.log(tail) - 20:
        horizon *= 2
    counts = _zn_shell_counts(n, horizon)
    terms = [c * math.exp(-math.pi * tau * s / 2) for s, c in enumerate(counts)]
    rest = math.fsum(terms)
    for m, t in enumerate(terms):
        rest -= t
        if rest < tail:
            return math.sqrt(m / 2)
    return math.sqrt(horizon / 2)


def direct_lattice_theta(code: BinaryCode, tau: float, radius: float | None = None) -> float:
    """Brute-force sum of exp(-pi tau ||lambda||^2) over lambda = (c + 2u)/sqrt(2).

    Enumerates integer vectors v = c + 2u with ||v||^2 <= 2 R^2 coordinate by
    coordinate, pruning on the partial norm.
    """
    if code.n > MAX_DIRECT_DIM:
        raise ValueError(f"direct lattice sum limited to n <= {MAX_DIRECT_DIM}")
    if not tau > 0:
        raise ThetaDomainError(f"tau must be positive, got {tau}")
    if radius is None:
        radius = default_radius(code.n, tau)
    bound = 2 * radius * radius
    n = code.n
    total = 0.0
    for c in code.codewords():
        terms: list[float] = []
        _enumerate_coset(c, 0, 0, bound, n, tau, terms)
        total += math.fsum(terms)
    return total


def _enumerate_coset(c, i, partial, bound, n, tau, out) -> None:
    if i == n:
        out.append(math.exp(-math.pi * tau * partial / 2))
        return
    room = bound - partial
    lim = math.isqrt(int(room)) if room >= 0 else -1
    # values v_i = c_i + 2u with v_i^2 <= room
    start = -lim + (-lim - c[i]) % 2
    for v in range(start, lim + 1, 2):
        _enumerate_coset(c, i + 1, partial + v * v, bound, n, tau, out)
