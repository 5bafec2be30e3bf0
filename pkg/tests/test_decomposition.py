"""Delta-factor decompositions: hat, paths, theta, inversion, reconstruction."""

import itertools

import pytest

from klrcrystals.cartan import build_cartan, longest_word
from klrcrystals.crystals import generate_crystal
from klrcrystals.decomposition import (
    DeltaFactor,
    counts_to_t,
    decompose,
    delta_factors,
    delta_indicator,
    hat,
    kashiwara_word,
    reconstruct,
    theta,
)
from klrcrystals.strings import adapted_string, string_to_element, triangle

B3 = build_cartan("B", 3)
C3 = build_cartan("C", 3)
D4 = build_cartan("D", 4)

T_STRING = (3, 3, 3, 0, 4, 3, 5, 2, 1)
T_LAM = (1, 1, 3)


def test_hat_values():
    assert [hat(B3, i) for i in range(1, 8)] == [-1, -2, -3, 0, 3, 2, 1]
    assert [hat(C3, i) for i in range(1, 7)] == [-1, -2, -3, 3, 2, 1]
    assert hat(build_cartan("A", 3), 4) == -4
    assert [hat(D4, i) for i in range(1, 9)] == [-1, -2, -3, -4, 4, 3, 2, 1]
    with pytest.raises(ValueError):
        hat(B3, 8)
    with pytest.raises(ValueError):
        hat(build_cartan("A", 3), 5)


def test_kashiwara_word_b3():
    assert kashiwara_word(B3, -1, 1) == (1, 2, 3, 3, 2, 1)
    assert kashiwara_word(B3, -3, 0) == (3,)
    assert kashiwara_word(B3, -3, 3) == (3, 3)


def test_kashiwara_word_d4_routes():
    assert kashiwara_word(D4, -3, 3) == (4, 3)  # canonical runs through 4
    assert kashiwara_word(D4, -3, 3, route="alt") == (3, 4)
    assert kashiwara_word(D4, -3, 4) == (4,)
    assert kashiwara_word(D4, -3, -4) == (3,)
    assert kashiwara_word(D4, -1, 1) == (1, 2, 4, 3, 2, 1)
    with pytest.raises(ValueError):
        kashiwara_word(D4, -3, 4, route="alt")  # only one path ends at 4


def test_kashiwara_word_requires_strict_dominance():
    with pytest.raises(ValueError):
        kashiwara_word(B3, 1, -1)
    with pytest.raises(ValueError):
        kashiwara_word(B3, 0, 0)
    with pytest.raises(ValueError):
        kashiwara_word(D4, -4, 4)  # incomparable pair


def test_delta_indicator():
    assert delta_indicator(B3, 0, 3) == 1
    assert delta_indicator(B3, 3, 0) == 0
    assert delta_indicator(B3, -2, -2) == 1
    assert delta_indicator(D4, -4, 4) == 0
    assert delta_indicator(D4, 4, -4) == 0
    assert delta_indicator(D4, -3, 4) == delta_indicator(D4, 4, 1) == 1
    with pytest.raises(ValueError):
        delta_indicator(B3, 4, 1)


def test_theta_worked_example():
    tri = triangle(B3, T_STRING)
    assert theta(B3, tri, 1, 3) == 1
    assert theta(B3, tri, 2, 5) == 0
    assert theta(B3, tri, 3, 2) == 0
    assert theta(B3, tri, 3, 5) == 1
    assert theta(B3, tri, 3, 6) == 1
    assert [theta(B3, tri, 3, j) for j in range(1, 7)] == [1, 0, 1, 0, 1, 1]


def test_delta_factors_worked_example():
    assert delta_factors(B3, T_STRING, 1) == (
        DeltaFactor(-3, 0, 1), DeltaFactor(-3, 3, 1))
    assert delta_factors(B3, T_STRING, 2) == (
        DeltaFactor(-2, -3, 1), DeltaFactor(-2, 0, 1), DeltaFactor(-2, 3, 1))
    assert delta_factors(B3, T_STRING, 3) == (
        DeltaFactor(-1, -2, 1), DeltaFactor(-1, 0, 1),
        DeltaFactor(-1, 2, 1), DeltaFactor(-1, 1, 1))


def test_decompose_worked_example():
    dec = decompose(B3, T_STRING, T_LAM)
    assert dec.eta == 9
    assert dec.bound == 21
    assert dec.nk_words[2] == ((1, 4), (2, 3), (3, 5), (2, 2), (1, 1))
    j = dec.to_json()
    assert j["eta"] == 9 and j["bound"] == 21
    assert j["blocks"][0] == [{"a": -3, "b": 0, "mult": 1},
                              {"a": -3, "b": 3, "mult": 1}]


def test_decompose_lowering_adds_factor():
    # the string of f_2 applied to the worked example's element
    dec = decompose(B3, (3, 4, 3, 0, 4, 3, 5, 2, 1))
    assert dec.blocks[1] == (
        DeltaFactor(-2, -3, 2), DeltaFactor(-2, 0, 1), DeltaFactor(-2, 3, 1))
    assert dec.eta == 10


def test_decompose_rejects_nonmember():
    with pytest.raises(ValueError):
        decompose(build_cartan("B", 2), (0, 0, 2, 0))


def test_counts_to_t_frozen_row():
    assert counts_to_t(B3, (1, 0, 1, 0, 1, 1)) == (4, 3, 5, 2, 1)
    assert counts_to_t(build_cartan("A", 2), (2, 1)) == (3, 1)
    assert counts_to_t(C3, (1, 1, 0, 2, 0)) == (4, 3, 2, 2, 0)


def test_counts_to_t_infeasible_rows():
    with pytest.raises(ValueError):
        counts_to_t(B3, (1, 0, 2, 0, 1, 1))  # middle entry must be 0 or 1
    with pytest.raises(ValueError):
        counts_to_t(D4, (1, 1, 1, 0, 0))  # both fork entries positive
    with pytest.raises(ValueError):
        counts_to_t(B3, (1, -1, 0, 0))


def _theta_rows(datum, tri):
    n = datum.rank
    if datum.type_tag == "D":
        for r in range(2, n):
            yield r, tuple(theta(datum, tri, r, j)
                           for j in range(n - r, n + r + 1))
    else:
        hi = {"A": 0, "B": 1, "C": 0}[datum.type_tag]
        for i in range(1, n + 1):
            lo = n + 1 - i
            top = n if datum.type_tag == "A" else n - 1 + i + hi
            yield i, tuple(theta(datum, tri, i, j)
                           for j in range(lo, top + 1))


@pytest.mark.parametrize("tag,rank,lam", [
    ("A", 3, (1, 1, 0)),
    ("B", 3, (1, 0, 1)),
    ("C", 3, (0, 1, 1)),
    ("D", 4, (1, 0, 1, 1)),
])
def test_counts_to_t_inverts_theta(tag, rank, lam):
    d = build_cartan(tag, rank)
    word = longest_word(tag, rank)
    for el in generate_crystal(d, lam).elements[::5]:
        tri = triangle(d, adapted_string(el, word).entries)
        for i, th in _theta_rows(d, tri):
            assert counts_to_t(d, th) == tri.rows[i - 1]


@pytest.mark.parametrize("tag,rank,lam", [
    ("A", 2, (1, 1)),
    ("B", 2, (1, 1)),
    ("B", 3, (1, 1, 1)),
    ("C", 3, (1, 0, 1)),
    ("D", 3, (1, 1, 1)),
    ("D", 4, (0, 1, 0, 1)),
])
def test_reconstruct_round_trip(tag, rank, lam):
    d = build_cartan(tag, rank)
    word = longest_word(tag, rank)
    for el in generate_crystal(d, lam).elements:
        s = adapted_string(el, word)
        dec = decompose(d, s.entries, lam)
        assert dec.eta <= dec.bound
        assert reconstruct(d, lam, dec) == el
        # vertical merge reproduces the stored N_k exponents
        from klrcrystals.decomposition import _merged_counts
        for k in range(1, rank + 1):
            assert _merged_counts(d, k, dec.blocks[k - 1]) == dec.nk_words[k - 1]


def test_reconstruct_worked_example():
    dec = decompose(B3, T_STRING, T_LAM)
    el = reconstruct(B3, T_LAM, dec)
    assert el == string_to_element(B3, T_LAM, T_STRING)


def test_factor_multiplicity_positive():
    with pytest.raises(ValueError):
        DeltaFactor(-1, 0, 0)


def test_block_weight_bookkeeping():
    # eta of each block equals the number of factors counted with multiplicity,
    # and every factor starts at the block's chain letter
    dec = decompose(D4, (5, 2, 7, 4, 3, 1, 9, 6, 4, 5, 3, 2))
    for k, blk in enumerate(dec.blocks, start=1):
        src = hat(D4, D4.rank + 1 - k) if k > 2 else -(D4.rank - 1)
        assert all(f.a == src for f in blk)
    assert dec.eta == sum(f.mult for blk in dec.blocks for f in blk)
