"""Gleason decomposition of even formally self-dual weight enumerators.

W(x, y) = sum_r a_r g1^(n/2 - 4r) g2^r with g1 = x^2 + y^2 and
g2 = x^8 + 14 x^4 y^4 + y^8; all arithmetic is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .gf2code import WeightEnumerator


class GleasonError(ValueError):
    pass


@dataclass(frozen=True)
class GleasonDecomposition:
    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n % 2:
            raise GleasonError("length must be even")
        if len(self.coeffs) != self.n // 8 + 1:
            raise GleasonError(f"need {self.n // 8 + 1} coefficients for n={self.n}")


def _binom(p: int, q: int) -> int:
    return comb(p, q) if 0 <= q <= p else 0


def basis_coefficient(n: int, r: int, w: int) -> int:
    """Coefficient of x^(n-w) y^w in g1^(n/2-4r) g2^r.

    Uses g2 = (x^4 + 7y^4)^2 - 48 y^8 and sums over 2j + 8h + 4l = w.
    """
    if w % 2:
        return 0
    total = 0
    for h in range(r + 1):
        for ell in range(2 * r - 2 * h + 1):
            rest = w - 8 * h - 4 * ell
            if rest < 0:
                break
            if rest % 2:
                continue
            j = rest // 2
            total += (
                7**ell
                * (-48) ** h
                * _binom(n // 2 - 4 * r, j)
                * _binom(r, h)
                * _binom(2 * r - 2 * h, ell)
            )
    return total


def _basis_matrix(n: int) -> list[list[int]]:
    top = n // 8
    return [[basis_coefficient(n, r, w) for r in range(top + 1)] for w in range(n + 1)]


def gleason_coefficients(we: WeightEnumerator) -> GleasonDecomposition:
    """Solve the exact linear system for a_0..a_{n/8}.

    Even-weight rows are taken in increasing w until the system has full
    rank; every other row (odd weights included) is then verified.
    """
    n = we.n
    if n % 2:
        raise GleasonError("enumerator is not even formally self-dual (odd length)")
    unknowns = n // 8 + 1
    matrix = _basis_matrix(n)

    # incremental Gauss-Jordan on rows [coeffs | A_w]
    pivot_rows: list[list[Fraction]] = []
    pivot_cols: list[int] = []
    for w in range(0, n + 1, 2):
        if len(pivot_rows) == unknowns:
            break
        row = [Fraction(c) for c in matrix[w]] + [Fraction(we.coeffs[w])]
        for pr, pc in zip(pivot_rows, pivot_cols):
            if row[pc]:
                f = row[pc]
                row = [a - f * b for a, b in zip(row, pr)]
        col = next((c for c in range(unknowns) if row[c]), None)
        if col is None:
            continue
        inv = 1 / row[col]
        row = [a * inv for a in row]
        for idx, pr in enumerate(pivot_rows):
            if pr[col]:
                f = pr[col]
                pivot_rows[idx] = [a - f * b for a, b in zip(pr, row)]
        pivot_rows.append(row)
        pivot_cols.append(col)
    if len(pivot_rows) < unknowns:
        raise GleasonError("Gleason system is singular")

    solution = [Fraction(0)] * unknowns
    for pr, pc in zip(pivot_rows, pivot_cols):
        solution[pc] = pr[-1]

    for w in range(n + 1):
        value = sum(a * c for a, c in zip(solution, matrix[w]))
        if value != we.coeffs[w]:
            raise GleasonError("enumerator is not even formally self-dual")
    return GleasonDecomposition(n, tuple(solution))


def reconstruct(dec: GleasonDecomposition) -> WeightEnumerator:
    n = dec.n
    matrix = _basis_matrix(n)
    coeffs = []
    for w in range(n + 1):
        value = sum(a * c for a, c in zip(dec.coeffs, matrix[w]))
        if value.denominator != 1:
            raise ArithmeticError(f"non-integer coefficient {value} at weight {w}")
        coeffs.append(int(value))
    return WeightEnumerator(n, tuple(coeffs))


def h(t):
    return t**4 - t**2 + 1


def f_c_from_gleason(dec: GleasonDecomposition, t):
    """2^(n/2) sum_r a_r (t^4 - t^2 + 1)^r."""
    arr = np.asarray(t, dtype=float)
    if not np.all((arr > 0) & (arr < 1)):
        raise ValueError("t must lie in the open interval (0, 1)")
    ht = h(arr)
    total = sum(float(a) * ht**r for r, a in enumerate(dec.coeffs))
    out = 2 ** (dec.n / 2) * total
    return out if np.ndim(out) else float(out)


def theorem4_condition(dec: GleasonDecomposition) -> Fraction:
    """sum_{r>=1} r a_r (3/4)^(r-1); positive means the gain sits at tau = 1."""
    return sum(
        (r * a * Fraction(3, 4) ** (r - 1) for r, a in enumerate(dec.coeffs) if r),
        Fraction(0),
    )
