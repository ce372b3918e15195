import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_enumerator
from fulattice.catalog import get_entry
from fulattice.gf2code import CodeError, macwilliams, min_distance, weight_enumerator
from fulattice.tailbiting import (
    ConvolutionalSpec,
    free_distance,
    isodual_check,
    tailbiting_generator,
    tailbiting_parity,
    trellis_enumerator,
    trellis_run,
)

# memory-2 matrices for k = 5 written with the letters g1 = a + cD + eD^2, g2 = b + dD + fD^2
G_PATTERN = [
    "abcdef....",
    "..abcdef..",
    "....abcdef",
    "ef....abcd",
    "cdef....ab",
]
H_PATTERN = [
    "ba....fedc",
    "dcba....fe",
    "fedcba....",
    "..fedcba..",
    "....fedcba",
]


def substitute(pattern, spec):
    letters = dict(zip("ace", spec.g1)) | dict(zip("bdf", spec.g2))
    return tuple(tuple(letters.get(ch, 0) for ch in row) for row in pattern)


SPEC_75 = ConvolutionalSpec.from_octal("7", "5")

# fixed list used for the exhaustive oracle comparison (all full-rank for m+1 <= k <= 12)
SPECS = [
    ConvolutionalSpec((1,), (1,)),
    ConvolutionalSpec((1, 1), (1,)),
    ConvolutionalSpec((1, 1, 1), (1, 0, 1)),
    ConvolutionalSpec((1, 0, 1, 1), (1, 1, 1, 1)),
    ConvolutionalSpec((1, 1, 0, 1), (1, 1, 1, 1)),
    ConvolutionalSpec((1, 0, 0, 1, 1), (1, 1, 1, 0, 1)),
    ConvolutionalSpec((1, 1, 0, 0, 1), (1, 0, 1, 1, 1)),
]


def test_octal_convention():
    assert SPEC_75.g1 == (1, 1, 1) and SPEC_75.g2 == (1, 0, 1)
    assert SPEC_75.m == 2
    s = ConvolutionalSpec.from_octal("3", "1")
    assert (s.g1, s.g2, s.m) == ((1, 1), (1, 0), 1)


def test_spec_validation():
    with pytest.raises(CodeError):
        ConvolutionalSpec((0, 1), (1,))
    with pytest.raises(CodeError):
        ConvolutionalSpec((1, 2), (1,))
    with pytest.raises(CodeError):
        ConvolutionalSpec.from_octal("9", "1")
    with pytest.raises(CodeError):
        ConvolutionalSpec((1,) * 14, (1,))


def test_displayed_generator_and_parity():
    # (a, b, c, d, e, f) = (1, 1, 1, 0, 1, 1)
    assert tuple(v for pair in zip(SPEC_75.g1, SPEC_75.g2) for v in pair) == (1, 1, 1, 0, 1, 1)
    assert tailbiting_generator(SPEC_75, 5).generator == substitute(G_PATTERN, SPEC_75)
    assert tailbiting_parity(SPEC_75, 5).generator == substitute(H_PATTERN, SPEC_75)


@pytest.mark.parametrize("g1, g2", [((1, 0, 1), (1, 1, 1)), ((1, 1, 1), (1, 1, 0)), ((1, 1, 0), (1, 1, 1))])
def test_displayed_patterns_for_other_memory_two_specs(g1, g2):
    spec = ConvolutionalSpec(g1, g2)
    assert tailbiting_generator(spec, 5).generator == substitute(G_PATTERN, spec)
    assert tailbiting_parity(spec, 5).generator == substitute(H_PATTERN, spec)
    g = np.array(substitute(G_PATTERN, spec))
    h = np.array(tailbiting_parity(spec, 5).generator)
    assert not ((g @ h.T) % 2).any()


def test_memoryless_spec():
    spec = ConvolutionalSpec((1,), (1,))
    g = tailbiting_generator(spec, 3)
    assert g.generator == ((1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 1))
    assert trellis_enumerator(spec, 3).coeffs == (1, 0, 3, 0, 3, 0, 1)
    assert isodual_check(spec, 3)
    h = np.array(tailbiting_parity(spec, 3).generator)
    assert not ((np.array(g.generator) @ h.T) % 2).any()


def test_small_k_rejected():
    with pytest.raises(CodeError, match="k >= m\\+1"):
        tailbiting_generator(SPEC_75, 2)
    with pytest.raises(CodeError):
        trellis_enumerator(SPEC_75, 2)


def test_k5_trellis_brute_force_and_isodual():
    we = trellis_enumerator(SPEC_75, 5)
    assert we == brute_enumerator(tailbiting_generator(SPEC_75, 5))
    assert we.coeffs == (1, 0, 0, 5, 5, 6, 10, 5, 0, 0, 0)
    assert isodual_check(SPEC_75, 5)


def test_parity_product_vanishes_at_minimal_k():
    for spec in SPECS:
        k = spec.m + 1
        g = np.array(tailbiting_generator(spec, k).generator)
        h = np.array(tailbiting_parity(spec, k).generator)
        assert not ((g @ h.T) % 2).any()


def test_three_one_and_seven_five_k4():
    s31 = ConvolutionalSpec.from_octal("3", "1")
    assert isodual_check(s31, 2)
    assert trellis_enumerator(s31, 2).size == 4
    assert isodual_check(SPEC_75, 4)


def test_free_distance_bounds_tailbiting_distance():
    assert free_distance(SPEC_75) == 5
    assert free_distance(ConvolutionalSpec((1, 0, 1, 1), (1, 1, 1, 1))) == 6
    for spec in SPECS[1:]:
        for k in range(spec.m + 1, 13):
            assert min_distance(trellis_enumerator(spec, k)) <= free_distance(spec)


def test_branch_updates_linear_in_k():
    spec = SPECS[-1]
    base = trellis_run(spec, 6).branch_updates
    assert trellis_run(spec, 12).branch_updates == 2 * base
    assert trellis_run(spec, 24).branch_updates == 4 * base
    # and quadratic in the number of states: 2 * 4^m per section
    assert base == 6 * 2 * 4**spec.m


def test_large_k_uses_exact_integers():
    we = trellis_enumerator(SPEC_75, 70)
    assert we.size == 1 << 70
    assert macwilliams(we, 70) == we


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SPECS), st.data())
def test_trellis_matches_brute_force(spec, data):
    k = data.draw(st.integers(spec.m + 1, 12))
    we = trellis_enumerator(spec, k)
    assert we == weight_enumerator(tailbiting_generator(spec, k))
    assert we.size == 1 << k
    assert macwilliams(we, k) == we


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.integers(0, 1), min_size=2, max_size=2),
    st.lists(st.integers(0, 1), min_size=2, max_size=2),
    st.integers(3, 10),
)
def test_random_memory_two_specs_are_isodual(t1, t2, k):
    g1, g2 = (1, *t1), (1, *t2)
    if g1[-1] == 0 and g2[-1] == 0:
        return
    spec = ConvolutionalSpec(g1, g2)
    try:
        tailbiting_generator(spec, k)
    except CodeError:
        return  # rank-deficient tailbiting matrix
    assert isodual_check(spec, k)


# catalog entries that are tailbiting codes, with generators found by exhaustive search over memory <= 5
CATALOG_GENERATORS = [
    ("n18_ofsd_d5", "7", "5"),
    ("n22_ofsd_d6", "15", "17"),
    ("n24_efsd_d6", "16", "15"),
    ("n30_ofsd_d7", "72", "73"),
    ("n32_efsd_d8", "64", "57"),
    ("n32_ofsd_d7", "70", "65"),
    ("n40_efsd_d8", "64", "57"),
]


@pytest.mark.parametrize("name, g1, g2", CATALOG_GENERATORS)
def test_catalog_entry_regenerated_from_generators(name, g1, g2):
    entry = get_entry(name)
    spec = ConvolutionalSpec.from_octal(g1, g2)
    assert trellis_enumerator(spec, entry.k) == entry.we
    assert isodual_check(spec, entry.k)
