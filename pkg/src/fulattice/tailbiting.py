"""Isodual [2k, k] tailbiting codes from rate-1/2 convolutional codes."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gf2code import BinaryCode, CodeError, WeightEnumerator, weight_enumerator

MAX_MEMORY = 12


@dataclass(frozen=True)
class ConvolutionalSpec:
    """Generator polynomials g1(D), g2(D) as coefficient lists (index = power of D)."""

    g1: tuple[int, ...]
    g2: tuple[int, ...]
    m: int = field(init=False)

    def __post_init__(self) -> None:
        for g in (self.g1, self.g2):
            if not g or any(b not in (0, 1) for b in g):
                raise CodeError("generator polynomials need 0/1 coefficients")
        g1 = _trim(self.g1)
        g2 = _trim(self.g2)
        if not g1 or not g2 or g1[0] != 1 or g2[0] != 1:
            raise CodeError("generator polynomials must have constant term 1")
        m = max(len(g1), len(g2)) - 1
        if m > MAX_MEMORY:
            raise CodeError(f"memory {m} exceeds the trellis limit {MAX_MEMORY}")
        object.__setattr__(self, "g1", tuple(g1) + (0,) * (m + 1 - len(g1)))
        object.__setattr__(self, "g2", tuple(g2) + (0,) * (m + 1 - len(g2)))
        object.__setattr__(self, "m", m)

    @classmethod
    def from_octal(cls, g1: str, g2: str) -> ConvolutionalSpec:
        """Octal shorthand; the leading binary digit is the D^0 coefficient.

        ``from_octal("7", "5")`` is (1 + D + D^2, 1 + D^2).
        """
        return cls(_octal_to_poly(g1), _octal_to_poly(g2))

    def taps(self) -> tuple[int, int]:
        """Tap masks with bit j set when the D^j coefficient is 1."""
        return (
            sum(b << j for j, b in enumerate(self.g1)),
            sum(b << j for j, b in enumerate(self.g2)),
        )


def _trim(g) -> list[int]:
    g = list(g)
    while g and g[-1] == 0:
        g.pop()
    return g


def _octal_to_poly(text: str) -> tuple[int, ...]:
    try:
        value = int(text, 8)
    except ValueError:
        raise CodeError(f"not an octal polynomial: {text!r}") from None
    if value <= 0:
        raise CodeError(f"not an octal polynomial: {text!r}")
    return tuple(int(c) for c in bin(value)[2:])


def _check_k(spec: ConvolutionalSpec, k: int) -> None:
    if k < spec.m + 1:
        raise CodeError(f"tailbiting requires k >= m+1 (k={k}, m={spec.m})")


def tailbiting_generator(spec: ConvolutionalSpec, k: int) -> BinaryCode:
    """Row i carries g_{1,j} g_{2,j} at columns 2(i+j), 2(i+j)+1 mod 2k."""
    _check_k(spec, k)
    n = 2 * k
    rows = []
    for i in range(k):
        row = [0] * n
        for j in range(spec.m + 1):
            c = (2 * (i + j)) % n
            row[c] ^= spec.g1[j]
            row[c + 1] ^= spec.g2[j]
        rows.append(tuple(row))
    return BinaryCode(n, k, tuple(rows))


def tailbiting_parity(spec: ConvolutionalSpec, k: int) -> BinaryCode:
    """Row i carries the swapped pair g_{2,j} g_{1,j} at column 2(i-j) mod 2k."""
    _check_k(spec, k)
    n = 2 * k
    rows = []
    for i in range(k):
        row = [0] * n
        for j in range(spec.m + 1):
            c = (2 * (i - j)) % n
            row[c] ^= spec.g2[j]
            row[c + 1] ^= spec.g1[j]
        rows.append(tuple(row))
    return BinaryCode(n, k, tuple(rows))


def _parity(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x) & 1


@dataclass
class TrellisRun:
    enumerator: WeightEnumerator
    branch_updates: int


def trellis_run(spec: ConvolutionalSpec, k: int) -> TrellisRun:
    """Trellis enumerator with the number of branch updates performed.

    The state is the last m inputs, newest in bit 0. For each start state a
    table of 2^m weight polynomials is pushed through k sections; paths that
    end where they began are the tailbiting codewords.
    """
    _check_k(spec, k)
    m = spec.m
    n = 2 * k
    n_states = 1 << m
    mask = n_states - 1
    t1, t2 = spec.taps()
    states = np.arange(n_states, dtype=np.int64)
    # int64 is exact while counts stay below 2^62
    dtype = np.int64 if k < 62 else object

    branches = []
    for u in (0, 1):
        reg = (states << 1) | u
        w = _parity(reg & t1) + _parity(reg & t2)
        branches.append(((reg & mask), w))

    total = np.zeros(n + 1, dtype=dtype)
    updates = 0
    for start in range(n_states):
        table = np.zeros((n_states, n + 1), dtype=dtype)
        table[start, 0] = 1
        for _ in range(k):
            nxt = np.zeros_like(table)
            for dest, w in branches:
                for shift in (0, 1, 2):
                    sel = w == shift
                    if not sel.any():
                        continue
                    src = table[sel]
                    if shift:
                        src = np.concatenate(
                            [np.zeros((src.shape[0], shift), dtype=dtype), src[:, :-shift]],
                            axis=1,
                        )
                    np.add.at(nxt, dest[sel], src)
                updates += n_states
            table = nxt
        total += table[start]
    coeffs = tuple(int(c) for c in total)
    if sum(coeffs) != 1 << k:
        raise CodeError("trellis path count does not equal 2^k")
    return TrellisRun(WeightEnumerator(n, coeffs), updates)


def trellis_enumerator(spec: ConvolutionalSpec, k: int) -> WeightEnumerator:
    """Exact weight enumerator of the tailbiting code, O(k 4^m) branch updates.

    Counts input sequences, so it equals the code's enumerator whenever the
    tailbiting encoder is injective (full-rank generator).
    """
    return trellis_run(spec, k).enumerator


def isodual_check(spec: ConvolutionalSpec, k: int) -> bool:
    """The parity-check code must be the coordinate reversal of the code."""
    g = tailbiting_generator(spec, k)
    h = tailbiting_parity(spec, k)
    gt = np.array(g.generator, dtype=np.int64)
    ht = np.array(h.generator, dtype=np.int64)
    if ((gt @ ht.T) % 2).any():
        return False
    if not h.same_space(g.reversed()):
        return False
    if k <= 20:
        return weight_enumerator(g) == weight_enumerator(h)
    # reversal preserves weights, so the enumerators agree
    return True


def free_distance(spec: ConvolutionalSpec, max_len: int = 64) -> int:
    """Free distance by shortest path from the zero state back to it."""
    m = spec.m
    if m == 0:
        return sum((spec.g1[0], spec.g2[0]))
    t1, t2 = spec.taps()
    mask = (1 << m) - 1
    inf = 1 << 30
    # leave state 0 with input 1
    dist = {}
    reg = 1
    dist[reg & mask] = bin(reg & t1).count("1") % 2 + bin(reg & t2).count("1") % 2
    best = inf
    frontier = dict(dist)
    for _ in range(max_len):
        new: dict[int, int] = {}
        for s, d in frontier.items():
            for u in (0, 1):
                reg = (s << 1) | u
                ns = reg & mask
                nd = d + bin(reg & t1).count("1") % 2 + bin(reg & t2).count("1") % 2
                if ns == 0:
                    best = min(best, nd)
                    continue
                if nd < new.get(ns, inf) and nd < best:
                    new[ns] = nd
        frontier = new
        if not frontier:
            break
    return best
