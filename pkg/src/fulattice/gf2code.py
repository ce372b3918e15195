"""Binary linear codes: duals, weight enumerators, MacWilliams transform."""
from __future__ import annotations

import enum
import math
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_LENGTH = 64
MAX_ENUM_DIMENSION = 28


class CodeError(ValueError):
    """Invalid code or enumerator input."""


class EnumerationLimitError(CodeError):
    """Code too large for exhaustive codeword enumeration."""


class DualityClass(enum.Enum):
    SELF_DUAL = "self_dual"
    FORMALLY_SELF_DUAL_EVEN = "formally_self_dual_even"
    FORMALLY_SELF_DUAL_ODD = "formally_self_dual_odd"
    NONE = "none"


def _row_to_int(row: Sequence[int]) -> int:
    # column j -> bit j
    value = 0
    for j, bit in enumerate(row):
        if bit not in (0, 1):
            raise CodeError(f"generator entries must be 0 or 1, got {bit!r}")
        if bit:
            value |= 1 << j
    return value


def _int_to_row(value: int, n: int) -> tuple[int, ...]:
    return tuple((value >> j) & 1 for j in range(n))


def _echelon(rows: Iterable[int]) -> dict[int, int]:
    """Reduced row echelon basis keyed by pivot bit (lowest set bit)."""
    basis: dict[int, int] = {}
    for r in rows:
        for p, b in basis.items():
            if (r >> p) & 1:
                r ^= b
        if r == 0:
            continue
        p = (r & -r).bit_length() - 1
        for q in list(basis):
            if (basis[q] >> p) & 1:
                basis[q] ^= r
        basis[p] = r
    return basis


def gf2_rank(rows: Iterable[int]) -> int:
    return len(_echelon(rows))


@dataclass(frozen=True)
class BinaryCode:
    """A binary [n, k] linear code given by a full-rank generator matrix."""

    n: int
    k: int
    generator: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise CodeError("code length must be positive")
        if self.n > MAX_LENGTH:
            raise EnumerationLimitError(
                f"code length {self.n} exceeds the supported limit n <= {MAX_LENGTH}"
            )
        if not 0 <= self.k <= self.n:
            raise CodeError(f"dimension k={self.k} out of range for n={self.n}")
        if len(self.generator) != self.k or any(len(r) != self.n for r in self.generator):
            raise CodeError(f"generator must be a {self.k}x{self.n} bit matrix")
        if gf2_rank(_row_to_int(r) for r in self.generator) != self.k:
            raise CodeError("not a valid generator matrix: rows are linearly dependent")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str], n: int | None = None) -> BinaryCode:
        parsed = [tuple(int(c) for c in r) for r in rows]
        if n is None:
            if not parsed:
                raise CodeError("length must be given for the zero code")
            n = len(parsed[0])
        return cls(n, len(parsed), tuple(parsed))

    @classmethod
    def from_ints(cls, rows: Sequence[int], n: int) -> BinaryCode:
        return cls(n, len(rows), tuple(_int_to_row(r, n) for r in rows))

    @property
    def rows(self) -> list[int]:
        return [_row_to_int(r) for r in self.generator]

    def codewords(self) -> list[tuple[int, ...]]:
        """All 2^k codewords as bit tuples (small codes only)."""
        words = [0]
        for r in self.rows:
            words += [w ^ r for w in words]
        return [_int_to_row(w, self.n) for w in words]

    def span_basis(self) -> dict[int, int]:
        return _echelon(self.rows)

    def same_space(self, other: BinaryCode) -> bool:
        """Row-space equality by double inclusion."""
        if self.n != other.n or self.k != other.k:
            return False
        return gf2_rank(self.rows + other.rows) == self.k

    def reversed(self) -> BinaryCode:
        return BinaryCode(self.n, self.k, tuple(tuple(reversed(r)) for r in self.generator))

    def to_text(self) -> str:
        lines = [f"{self.n} {self.k}"]
        lines += ["".join(str(b) for b in r) for r in self.generator]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> BinaryCode:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise CodeError("empty code file")
        try:
            n, k = (int(v) for v in lines[0].split())
        except ValueError:
            raise CodeError("first line must be 'n k'") from None
        if n > MAX_LENGTH:
            raise EnumerationLimitError(
                f"code length {n} exceeds the supported limit n <= {MAX_LENGTH}"
            )
        rows = lines[1:]
        if len(rows) != k:
            raise CodeError(f"expected {k} generator rows, found {len(rows)}")
        for r in rows:
            if len(r) != n or set(r) - {"0", "1"}:
                raise CodeError(f"bad generator row {r!r}: need {n} characters in {{0,1}}")
        return cls.from_rows(rows, n=n)


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients A_0..A_n of W(x, y) = sum A_w x^(n-w) y^w."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n + 1:
            raise CodeError(f"need {self.n + 1} coefficients, got {len(self.coeffs)}")
        if any(a < 0 for a in self.coeffs):
            raise CodeError("enumerator coefficients must be nonnegative")

    @classmethod
    def from_dict(cls, n: int, terms: dict[int, int]) -> WeightEnumerator:
        coeffs = [0] * (n + 1)
        for w, a in terms.items():
            if not 0 <= w <= n:
                raise CodeError(f"weight {w} out of range for n={n}")
            coeffs[w] += a
        return cls(n, tuple(coeffs))

    def __getitem__(self, w: int) -> int:
        return self.coeffs[w]

    @property
    def size(self) -> int:
        return sum(self.coeffs)

    @property
    def dimension(self) -> int:
        """log2 of the number of codewords."""
        s = self.size
        if s & (s - 1):
            raise CodeError("codeword count is not a power of two")
        return s.bit_length() - 1

    @property
    def is_even(self) -> bool:
        return all(a == 0 for a in self.coeffs[1::2])

    def support(self) -> list[tuple[int, int]]:
        return [(w, a) for w, a in enumerate(self.coeffs) if a]

    def to_text(self) -> str:
        return "".join(f"{w} {a}\n" for w, a in self.support())

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> WeightEnumerator:
        terms: dict[int, int] = {}
        for ln in text.splitlines():
            ln = ln.strip()
            if ln.startswith("#"):
                # optional header "# n=<length>"; needed when A_n = 0
                head = ln.lstrip("# ").replace(" ", "")
                if head.startswith("n=") and n is None:
                    n = int(head[2:].split(",")[0])
                continue
            if not ln:
                continue
            parts = ln.split()
            if len(parts) != 2:
                raise CodeError(f"bad enumerator line {ln!r}: expected 'w A_w'")
            try:
                w, a = int(parts[0]), int(parts[1])
            except ValueError:
                raise CodeError(f"bad enumerator line {ln!r}: expected integers") from None
            if w in terms:
                raise CodeError(f"duplicate weight {w}")
            terms[w] = a
        if not terms:
            raise CodeError("empty enumerator")
        if n is None:
            n = max(terms)
        return cls.from_dict(n, terms)

    def polynomial(self) -> str:
        parts = []
        for w, a in self.support():
            mono = "".join(
                s for s in (_power("x", self.n - w), _power("y", w)) if s
            ) or "1"
            parts.append(mono if a == 1 and mono != "1" else f"{a}{mono}")
        return "+".join(parts)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def dual_code(code: BinaryCode) -> BinaryCode:
    """Generator of C-perp from the reduced echelon form of C."""
    n = code.n
    basis = code.span_basis()
    pivots = set(basis)
    rows = []
    for f in range(n):
        if f in pivots:
            continue
        # free column f: x_f = 1, pivot variables solved from each row
        v = 1 << f
        for p, r in basis.items():
            if (r >> f) & 1:
                v |= 1 << p
        rows.append(v)
    return BinaryCode.from_ints(rows, n)


def weight_enumerator(code: BinaryCode) -> WeightEnumerator:
    """Exhaustive enumeration over all 2^k messages.

    Codewords of the first rows are tabulated once; the remaining rows are
    walked in Gray-code order, toggling one generator per step.
    """
    if code.k > MAX_ENUM_DIMENSION:
        raise EnumerationLimitError(
            f"k={code.k} exceeds the exhaustive limit {MAX_ENUM_DIMENSION}; "
            "use the tailbiting trellis enumerator or the catalog"
        )
    rows = code.rows
    split = min(len(rows), 16)
    low = np.zeros(1, dtype=np.uint64)
    for r in rows[:split]:
        low = np.concatenate([low, low ^ np.uint64(r)])
    high = rows[split:]
    counts = np.zeros(code.n + 1, dtype=np.int64)
    v = 0
    for step in range(1 << len(high)):
        if step:
            v ^= high[(step & -step).bit_length() - 1]
        weights = np.bitwise_count(low ^ np.uint64(v))
        counts += np.bincount(weights, minlength=code.n + 1)
    return WeightEnumerator(code.n, tuple(int(c) for c in counts))


@lru_cache(maxsize=None)
def _krawtchouk_rows(n: int) -> list[list[int]]:
    # K[w][j] = coefficient of y^j in (x+y)^(n-w) (x-y)^w
    table = []
    for w in range(n + 1):
        row = [0] * (n + 1)
        for i in range(n - w + 1):
            ci = math.comb(n - w, i)
            for j in range(w + 1):
                term = ci * math.comb(w, j)
                row[i + j] += -term if j & 1 else term
        table.append(row)
    return table


def macwilliams(we: WeightEnumerator, k: int) -> WeightEnumerator:
    """Enumerator of the dual: W_dual(x, y) = 2^-k W(x + y, x - y)."""
    n = we.n
    if we.size != 1 << k:
        raise CodeError(f"input is not a valid [{n},{k}] enumerator (size {we.size})")
    out = [0] * (n + 1)
    for w, a in we.support():
        for j, c in enumerate(_krawtchouk_rows(n)[w]):
            out[j] += a * c
    result = []
    for c in out:
        q, rem = divmod(c, 1 << k)
        if rem or q < 0:
            raise CodeError(f"input is not a valid [{n},{k}] enumerator")
        result.append(q)
    return WeightEnumerator(n, tuple(result))




def is_formally_self_dual(we: WeightEnumerator) -> bool:
    if we.n % 2 or we.size != 1 << (we.n // 2):
        return False
    return macwilliams(we, we.n // 2) == we


def classify(code: BinaryCode, we: WeightEnumerator | None = None) -> DualityClass:
    if 2 * code.k != code.n:
        return DualityClass.NONE
    if code.same_space(dual_code(code)):
        return DualityClass.SELF_DUAL
    if we is None:
        we = weight_enumerator(code)
    return classify_enumerator(we)


def classify_enumerator(we: WeightEnumerator) -> DualityClass:
    """Duality class decidable from the enumerator alone (never SELF_DUAL)."""
    if not is_formally_self_dual(we):
        return DualityClass.NONE
    if we.is_even:
        return DualityClass.FORMALLY_SELF_DUAL_EVEN
    return DualityClass.FORMALLY_SELF_DUAL_ODD


def min_distance(we: WeightEnumerator) -> float | int:
    """Smallest nonzero weight; math.inf for the zero code."""
    for w in range(1, we.n + 1):
        if we.coeffs[w]:
            return w
    return math.inf


def random_code(n: int, k: int, rng: np.random.Generator) -> BinaryCode:
    """Uniform full-rank k x n generator (rejection sampling)."""
    while True:
        bits = rng.integers(0, 2, size=(k, n))
        rows = [_row_to_int([int(b) for b in r]) for r in bits]
        if gf2_rank(rows) == k:
            return BinaryCode.from_ints(rows, n)
