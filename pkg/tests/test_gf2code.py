import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    EX1_CODE,
    HAMMING8,
    REPETITION3,
    brute_dual_words,
    brute_enumerator,
    enumerator_of_words,
    small_codes,
)
from fulattice.gf2code import (
    BinaryCode,
    CodeError,
    DualityClass,
    EnumerationLimitError,
    WeightEnumerator,
    classify,
    classify_enumerator,
    dual_code,
    gf2_rank,
    is_formally_self_dual,
    macwilliams,
    min_distance,
    random_code,
    weight_enumerator,
)

E8_WE = WeightEnumerator.from_dict(8, {0: 1, 4: 14, 8: 1})
EX1_WE = WeightEnumerator.from_dict(6, {0: 1, 3: 4, 4: 3})


def test_repetition_enumerator():
    assert weight_enumerator(REPETITION3).coeffs == (1, 0, 0, 1)
    assert weight_enumerator(REPETITION3).to_text() == "0 1\n3 1\n"


def test_n6_odd_and_hamming_enumerators():
    assert weight_enumerator(EX1_CODE) == EX1_WE
    assert weight_enumerator(HAMMING8) == E8_WE


def test_dual_of_repetition_is_even_weight_code():
    d = dual_code(REPETITION3)
    assert (d.n, d.k) == (3, 2)
    assert d.same_space(BinaryCode.from_rows(["110", "011"]))


def test_dual_of_full_space_is_zero_code():
    full = BinaryCode.from_rows(["100", "010", "001"])
    d = dual_code(full)
    assert (d.n, d.k) == (3, 0)
    assert weight_enumerator(d).coeffs == (1, 0, 0, 0)


def test_hamming_is_self_dual():
    assert dual_code(HAMMING8).same_space(HAMMING8)
    assert classify(HAMMING8) is DualityClass.SELF_DUAL


def test_macwilliams_examples():
    assert macwilliams(WeightEnumerator(3, (1, 0, 0, 1)), 1).coeffs == (1, 0, 3, 0)
    assert macwilliams(E8_WE, 4) == E8_WE
    assert macwilliams(EX1_WE, 3) == EX1_WE


def test_macwilliams_rejects_inconsistent_input():
    with pytest.raises(CodeError):
        macwilliams(EX1_WE, 2)
    with pytest.raises(CodeError):
        macwilliams(WeightEnumerator(3, (1, 0, 0, 3)), 2)


def test_classify_examples():
    assert classify(EX1_CODE) is DualityClass.FORMALLY_SELF_DUAL_ODD
    assert classify(BinaryCode.from_rows(["110000", "001100"])) is DualityClass.NONE
    # (x^2+y^2)^3 is even and formally self-dual
    g1_cubed = WeightEnumerator(6, (1, 0, 3, 0, 3, 0, 1))
    assert classify_enumerator(g1_cubed) is DualityClass.FORMALLY_SELF_DUAL_EVEN


def test_classify_even_fsd_code_that_is_not_self_dual():
    # enumerator (x^2+y^2)^3 but 111010 and 101011 are not orthogonal
    c = BinaryCode.from_rows(["111111", "111010", "101011"])
    we = weight_enumerator(c)
    assert is_formally_self_dual(we)
    assert not dual_code(c).same_space(c)
    assert classify(c) is DualityClass.FORMALLY_SELF_DUAL_EVEN


def test_min_distance():
    assert min_distance(E8_WE) == 4
    assert min_distance(WeightEnumerator(3, (1, 0, 0, 1))) == 3
    assert min_distance(WeightEnumerator(4, (1, 0, 0, 0, 0))) == math.inf


def test_generator_validation():
    with pytest.raises(CodeError, match="not a valid generator"):
        BinaryCode.from_rows(["110", "110"])
    with pytest.raises(EnumerationLimitError):
        BinaryCode.from_text("65 1\n" + "1" * 65 + "\n")
    with pytest.raises(CodeError):
        BinaryCode.from_text("3 1\n1a1\n")
    with pytest.raises(CodeError):
        BinaryCode.from_text("3 2\n111\n")


def test_code_text_round_trip():
    assert BinaryCode.from_text(HAMMING8.to_text()) == HAMMING8


def test_enumerator_text_header_and_errors():
    we = WeightEnumerator.from_text("# n=5\n0 1\n2 1\n")
    assert we.n == 5 and we.coeffs == (1, 0, 1, 0, 0, 0)
    assert WeightEnumerator.from_text(E8_WE.to_text()) == E8_WE
    for bad in ("0 x\n", "0 1 2\n", "", "0 1\n0 1\n"):
        with pytest.raises(CodeError):
            WeightEnumerator.from_text(bad)


def test_enumeration_limit():
    rng = np.random.default_rng(1)
    code = random_code(40, 29, rng)
    with pytest.raises(EnumerationLimitError):
        weight_enumerator(code)


def test_meet_in_the_middle_path_against_small_dual():
    # k = 22 exercises the table-plus-Gray-code split; the dual has only 2^4 words
    rng = np.random.default_rng(7)
    code = random_code(26, 22, rng)
    dual_we = brute_enumerator(dual_code(code))
    assert weight_enumerator(code) == macwilliams(dual_we, 4)
    assert weight_enumerator(code).size == 1 << 22


def test_random_code_has_full_rank(rng):
    for n, k in [(10, 5), (20, 3), (64, 12)]:
        c = random_code(n, k, rng)
        assert gf2_rank(c.rows) == k


def test_polynomial_string():
    assert E8_WE.polynomial() == "x^8+14x^4y^4+y^8"


@settings(max_examples=60, deadline=None)
@given(small_codes())
def test_enumerator_matches_brute_force(code):
    we = weight_enumerator(code)
    assert we == brute_enumerator(code)
    assert we[0] == 1
    assert we.size == 1 << code.k


@settings(max_examples=40, deadline=None)
@given(small_codes(max_n=9))
def test_dual_code_matches_brute_force(code):
    d = dual_code(code)
    assert d.k == code.n - code.k
    words = brute_dual_words(code)
    assert len(words) == 1 << d.k
    assert weight_enumerator(d) == enumerator_of_words(code.n, words)


@settings(max_examples=60, deadline=None)
@given(small_codes(max_n=14))
def test_macwilliams_matches_dual_enumerator(code):
    we = weight_enumerator(code)
    assert weight_enumerator(dual_code(code)) == macwilliams(we, code.k)


@settings(max_examples=60, deadline=None)
@given(small_codes(max_n=20))
def test_macwilliams_is_an_involution(code):
    we = weight_enumerator(code)
    assert macwilliams(macwilliams(we, code.k), code.n - code.k) == we


@settings(max_examples=30, deadline=None)
@given(small_codes(max_n=8))
def test_macwilliams_against_symbolic_substitution(code):
    x, y = sympy.symbols("x y")
    we = weight_enumerator(code)
    poly = sum(a * x ** (code.n - w) * y**w for w, a in we.support())
    sub = sympy.expand(poly.subs({x: x + y, y: x - y}, simultaneous=True) / 2**code.k)
    dual = macwilliams(we, code.k)
    assert sympy.expand(sub - sum(a * x ** (code.n - w) * y**w for w, a in dual.support())) == 0


@settings(max_examples=40, deadline=None)
@given(small_codes(max_n=10))
def test_fsd_codes_are_invariant_under_the_scaled_transform(code):
    we = weight_enumerator(code)
    if classify(code, we) is DualityClass.NONE:
        return
    x, y = sympy.symbols("x y")
    r = sympy.sqrt(2)
    poly = sum(a * x ** (code.n - w) * y**w for w, a in we.support())
    img = poly.subs({x: (x + y) / r, y: (x - y) / r}, simultaneous=True)
    assert sympy.expand(img - poly) == 0


@settings(max_examples=40, deadline=None)
@given(small_codes(max_n=12))
def test_even_iff_no_odd_weights(code):
    we = weight_enumerator(code)
    assert we.is_even == all(sum(r) % 2 == 0 for r in code.generator)


@given(st.integers(1, 12), st.data())
@settings(max_examples=20, deadline=None)
def test_classify_none_when_k_not_half(n, data):
    k = data.draw(st.integers(0, n).filter(lambda k: 2 * k != n))
    c = random_code(n, k, np.random.default_rng(data.draw(st.integers(0, 1000))))
    assert classify(c) is DualityClass.NONE
