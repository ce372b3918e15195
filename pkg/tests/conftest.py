"""Independent oracles shared by the test modules.

These deliberately avoid the package's fast paths: enumeration multiplies
every message by the generator, duals come from scanning all of GF(2)^n,
and polynomial identities are expanded with sympy.
"""
from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from fulattice.gf2code import BinaryCode, WeightEnumerator, gf2_rank


def brute_enumerator(code: BinaryCode) -> WeightEnumerator:
    g = np.array(code.generator, dtype=np.int64).reshape(code.k, code.n)
    counts = [0] * (code.n + 1)
    for msg in itertools.product((0, 1), repeat=code.k):
        word = (np.array(msg, dtype=np.int64) @ g) % 2 if code.k else np.zeros(code.n, int)
        counts[int(word.sum())] += 1
    return WeightEnumerator(code.n, tuple(counts))


def brute_dual_words(code: BinaryCode) -> list[tuple[int, ...]]:
    g = np.array(code.generator, dtype=np.int64).reshape(code.k, code.n)
    out = []
    for v in itertools.product((0, 1), repeat=code.n):
        if not ((g @ np.array(v)) % 2).any():
            out.append(v)
    return out


def enumerator_of_words(n: int, words) -> WeightEnumerator:
    counts = [0] * (n + 1)
    for w in words:
        counts[sum(w)] += 1
    return WeightEnumerator(n, tuple(counts))


REPETITION3 = BinaryCode.from_rows(["111"])
# the [6,3,3] odd formally self-dual code with enumerator x^6 + 4x^3y^3 + 3x^2y^4
EX1_CODE = BinaryCode.from_rows(["100110", "010101", "001011"])
HAMMING8 = BinaryCode.from_rows(["11111111", "00001111", "00110011", "01010101"])
REP2 = BinaryCode.from_rows(["11"])


@st.composite
def small_codes(draw, max_n: int = 10):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n))
    rows = []
    while len(rows) < k:
        r = draw(st.integers(1, (1 << n) - 1))
        if gf2_rank(rows + [r]) == len(rows) + 1:
            rows.append(r)
    return BinaryCode.from_ints(rows, n)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("] ")[1].split(".")[0])):
            terminalreporter.write_line(line)
