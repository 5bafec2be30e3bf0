"""Cartan data, positive roots, and the fixed w0 words."""

import pytest

from klrcrystals.cartan import (
    build_cartan,
    coroot_pairing,
    longest_word,
    positive_roots,
    verify_reduced_longest,
)

ROOT_COUNTS = {
    ("A", 3): 6,
    ("B", 3): 9,
    ("C", 4): 16,
    ("D", 4): 12,
    ("E", 6): 36,
    ("E", 7): 63,
    ("E", 8): 120,
    ("F", 4): 24,
    ("G", 2): 6,
}


def test_b3_matrix_and_symmetrizers():
    d = build_cartan("B", 3)
    assert d.a(3, 2) == -2
    assert d.a(2, 3) == -1
    assert d.symmetrizers == (2, 2, 1)


def test_c3_matrix_and_symmetrizers():
    d = build_cartan("C", 3)
    assert d.a(2, 3) == -2
    assert d.a(3, 2) == -1
    assert d.symmetrizers == (1, 1, 2)


def test_d4_fork():
    d = build_cartan("D", 4)
    assert d.a(2, 3) == d.a(2, 4) == -1
    assert d.a(3, 4) == 0
    assert d.symmetrizers == (1, 1, 1, 1)


def test_symmetry_of_bilinear_form():
    for tag, rank in ROOT_COUNTS:
        d = build_cartan(tag, rank)
        for i in d.index_set:
            for j in d.index_set:
                assert d.bilinear(i, j) == d.bilinear(j, i)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        build_cartan("Z", 3)
    with pytest.raises(ValueError):
        build_cartan("E", 5)
    with pytest.raises(ValueError):
        build_cartan("D", 2)
    with pytest.raises(ValueError):
        build_cartan("G", 3)


@pytest.mark.parametrize("tag,rank", sorted(ROOT_COUNTS))
def test_positive_root_counts(tag, rank):
    d = build_cartan(tag, rank)
    assert len(positive_roots(d)) == ROOT_COUNTS[(tag, rank)]


def test_b3_word_blocks():
    w = longest_word("B", 3)
    assert w.blocks == ((3,), (2, 3, 2), (1, 2, 3, 2, 1))
    assert w.length == 9


def test_d4_word_blocks():
    w = longest_word("D", 4)
    assert w.blocks == ((4,), (3,), (2, 4, 3, 2), (1, 2, 4, 3, 2, 1))
    assert w.length == 12


def test_g2_word_blocks():
    assert longest_word("G", 2).blocks == ((1,), (2, 1, 2, 1, 2))


@pytest.mark.parametrize("tag,rank", sorted(ROOT_COUNTS))
def test_words_are_reduced_w0(tag, rank):
    d = build_cartan(tag, rank)
    w = longest_word(tag, rank)
    assert w.length == ROOT_COUNTS[(tag, rank)]
    assert verify_reduced_longest(d, w.flat)


def test_non_reduced_word_rejected():
    d = build_cartan("A", 2)
    assert not verify_reduced_longest(d, (1, 1, 2))
    assert not verify_reduced_longest(d, (1, 2))  # reduced but not w0
    assert verify_reduced_longest(d, (1, 2, 1))


def test_coroot_pairing_fundamental_vs_simple():
    d = build_cartan("B", 3)
    for i in d.index_set:
        lam = tuple(1 if j == i else 0 for j in d.index_set)
        alpha = tuple(1 if j == i else 0 for j in d.index_set)
        assert coroot_pairing(d, lam, alpha) == 1
