"""Characters of two-letter modules, shuffle products, Serre validation."""

import pytest

from klrcrystals.cartan import build_cartan, longest_word
from klrcrystals.characters import (
    Character,
    ch_delta,
    character,
    coefficient,
    decomposition_character,
    serre_check,
    shuffle,
    shuffle_mass_bound,
)
from klrcrystals.crystals import generate_crystal
from klrcrystals.decomposition import decompose, delta_indicator, hat
from klrcrystals.strings import adapted_string

A2 = build_cartan("A", 2)
B3 = build_cartan("B", 3)
C3 = build_cartan("C", 3)
D4 = build_cartan("D", 4)


def test_character_invariants():
    with pytest.raises(ValueError):
        Character(2, {(1,): 0})
    with pytest.raises(ValueError):
        Character(2, {(1,): 1, (1, 2): 1})  # inhomogeneous
    with pytest.raises(ValueError):
        character(2, (3,))
    c = character(2, (1, 2), (1, 2), (2, 1))
    assert c.alpha == (1, 1) and c.mass == 3


def test_ch_delta_cases():
    assert ch_delta(B3, (-1, 1)).terms == {(1, 2, 3, 3, 2, 1): 2}
    assert ch_delta(B3, (-1, -2)).terms == {(1,): 1}
    assert ch_delta(D4, (-3, 3)).terms == {(4, 3): 1, (3, 4): 1}
    assert ch_delta(D4, (-1, 1)).terms == {
        (1, 2, 4, 3, 2, 1): 1, (1, 2, 3, 4, 2, 1): 1}
    assert ch_delta(C3, (-1, 1)).terms == {(1, 2, 3, 2, 1): 1}
    assert ch_delta(D4, (-3, -4)).terms == {(3,): 1}  # ends above the fork
    with pytest.raises(ValueError):
        ch_delta(B3, (1, -1))


def test_shuffle_basics():
    one, two = character(2, (1,)), character(2, (2,))
    assert shuffle(one, two).terms == {(1, 2): 1, (2, 1): 1}
    assert shuffle(one, one).terms == {(1, 1): 2}
    a = character(2, (1, 2))
    assert shuffle(a, one).terms == shuffle(one, a).terms
    # associativity
    x = shuffle(shuffle(a, one), two)
    y = shuffle(a, shuffle(one, two))
    assert x.terms == y.terms
    assert x.mass == shuffle_mass_bound([2, 1, 1])


def test_coefficient_queries():
    c = character(2, (1, 2), (2, 1))
    assert coefficient(c, (1, 2)) == 1
    assert coefficient(c, (2, 2)) == 0
    assert coefficient(Character(2), (1,)) == 0


def test_multiplicity_b_type_closed_form():
    # 2 * 2^{l-1} * 3 at l = 3 and l = 2
    full = ch_delta(B3, (-1, 1))
    c3 = shuffle(full, character(3, (1, 2, 3)))
    assert coefficient(c3, (1, 1, 2, 2, 3, 3, 3, 2, 1)) == 24
    c2 = shuffle(full, character(3, (2, 3)))
    assert coefficient(c2, (1, 2, 2, 3, 3, 3, 2, 1)) == 12


def test_multiplicity_c_type_closed_form():
    # 2^l at l = 2 and l = 3
    full = ch_delta(C3, (-1, 1))
    assert coefficient(shuffle(full, character(3, (3, 2))),
                       (1, 2, 3, 3, 2, 2, 1)) == 4
    assert coefficient(shuffle(full, character(3, (3, 2, 1))),
                       (1, 2, 3, 3, 2, 2, 1, 1)) == 8


def test_multiplicity_d_type_closed_form():
    # 2^l at l = 2 for the fork-splitting product
    left = character(4, (4, 3, 2), (3, 4, 2))
    right = ch_delta(D4, (-3, 3))
    assert coefficient(shuffle(left, right), (4, 4, 3, 3, 2)) == 4


def test_serre_check_examples():
    prod = shuffle(Character(2, {(1, 1): 2}), character(2, (2,)))
    assert prod.terms == {(1, 1, 2): 2, (1, 2, 1): 2, (2, 1, 1): 2}
    assert serre_check(A2, prod) == []
    # lone middle word violates the three-term identity
    bad = character(2, (1, 2, 1))
    report = serre_check(A2, bad)
    assert report and report[0]["relation"] == "serre-1"
    assert report[0]["lhs"] == 2 and report[0]["rhs"] == 0
    assert serre_check(A2, character(2, (1,))) == []  # vacuous


def test_serre_check_transpose_and_double_bond():
    a3 = build_cartan("A", 3)
    assert serre_check(a3, character(3, (1, 3), (3, 1))) == []
    rep = serre_check(a3, character(3, (1, 3)))
    assert rep and rep[0]["relation"] == "transpose"
    b2 = build_cartan("B", 2)
    rep2 = serre_check(b2, character(2, (2, 1, 2, 2)))
    assert rep2 and rep2[0]["relation"] == "serre-2"


@pytest.mark.parametrize("datum", [build_cartan("A", 3), B3, C3, D4])
def test_all_ch_delta_pass_serre(datum):
    n = datum.rank
    top = 2 * n + 1 if datum.type_tag == "B" else (
        n + 1 if datum.type_tag == "A" else 2 * n)
    letters = [hat(datum, i) for i in range(1, top + 1)]
    for a in letters:
        for b in letters:
            if a != b and delta_indicator(datum, a, b):
                assert serre_check(datum, ch_delta(datum, (a, b))) == []


def test_decomposition_character_small_and_cap():
    d = build_cartan("B", 2)
    word = longest_word("B", 2)
    lam = (1, 1)
    for el in generate_crystal(d, lam).elements:
        dec = decompose(d, adapted_string(el, word).entries, lam)
        ch = decomposition_character(d, dec, cap=10**4)
        assert serre_check(d, ch) == []
    big = decompose(B3, (3, 3, 3, 0, 4, 3, 5, 2, 1), (1, 1, 3))
    with pytest.raises(ValueError, match="cap"):
        decomposition_character(B3, big, cap=10**5)


def test_character_json_deterministic():
    c = character(2, (2, 1), (1, 2), (1, 2))
    j = c.to_json()
    assert j == {"alpha": [1, 1],
                 "terms": [{"seq": [1, 2], "coef": 2},
                           {"seq": [2, 1], "coef": 1}]}
    assert str(c) == "2*(1,2) + (2,1)"
