"""Adapted strings: extraction, membership systems, triangles, enumeration."""

import itertools
from collections import Counter

import pytest

from klrcrystals.cartan import build_cartan, longest_word, positive_roots
from klrcrystals.crystals import generate_crystal, tensor_apply
from klrcrystals.strings import (
    adapted_string,
    c_partial,
    enumerate_S_lambda,
    in_S,
    in_S_lambda,
    make_string,
    string_to_element,
    triangle,
)

B3 = build_cartan("B", 3)
D4 = build_cartan("D", 4)


def test_in_S_known_members():
    assert in_S(B3, (2, 3, 1, 0, 9, 8, 4, 2, 1))
    assert in_S(D4, (5, 2, 7, 4, 3, 1, 9, 6, 4, 5, 3, 2))


def test_in_S_zero_and_negatives():
    for tag, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2),
                      ("F", 4), ("E", 6)]:
        d = build_cartan(tag, rank)
        l = longest_word(tag, rank).length
        assert in_S(d, (0,) * l)
    assert not in_S(build_cartan("B", 2), (0, 0, 2, 0))
    with pytest.raises(ValueError):
        in_S(B3, (1, 2, 3))


def test_g2_system():
    g2 = build_cartan("G", 2)
    assert in_S(g2, (0, 3, 1, 0, 0, 0))
    assert not in_S(g2, (0, 0, 1, 1, 0, 0))  # 6a_{2,1} >= 2a_{2,2} fails
    assert in_S(g2, (0, 3, 2, 1, 1, 0))
    assert not in_S(g2, (0, 2, 1, 1, 1, 0))  # 2a_{2,2} >= 3a_{2,3} fails


def test_triangle_worked_example_entries():
    tri = triangle(B3, (2, 3, 1, 0, 9, 8, 4, 2, 1))
    assert tri.t(1, 3) == 2
    assert tri.rows == ((2,), (3, 1, 0), (9, 8, 4, 2, 1))
    assert tri.t(0, 3) == tri.t(4, 1) == tri.t(1, 2) == 0
    trid = triangle(D4, (5, 2, 7, 4, 3, 1, 9, 6, 4, 5, 3, 2))
    assert trid.t(3, 4) == 5
    assert trid.rows == ((5, 2), (7, 4, 3, 1), (9, 6, 4, 5, 3, 2))


def test_c_partial_worked_example_values():
    tri = triangle(B3, (2, 3, 1, 0, 9, 8, 4, 2, 1))
    assert c_partial(B3, tri, 1, 3) == 7
    assert c_partial(B3, tri, 3, 1) == 10
    assert c_partial(B3, tri, 4, 3) == 0  # beyond the top row
    with pytest.raises(ValueError):
        c_partial(B3, tri, 1, 3, "ct")


def test_ct_variant_d4():
    trid = triangle(D4, (5, 2, 7, 4, 3, 1, 9, 6, 4, 5, 3, 2))
    assert c_partial(D4, trid, 1, 3, "ct") == 5 + 4 + 4
    assert c_partial(D4, trid, 2, 4, "ct") == 3 + 5


def test_adapted_string_b3_example():
    lam = (1, 1, 3)
    word = longest_word("B", 3)
    T = string_to_element(B3, lam, (3, 3, 3, 0, 4, 3, 5, 2, 1))
    assert adapted_string(T, word).entries == (3, 3, 3, 0, 4, 3, 5, 2, 1)
    f1 = tensor_apply("f", 1, T)
    f2 = tensor_apply("f", 2, T)
    assert adapted_string(f1, word).entries == (3, 2, 1, 0, 5, 4, 7, 2, 1)
    assert adapted_string(f2, word).entries == (3, 4, 3, 0, 4, 3, 5, 2, 1)
    assert tensor_apply("f", 3, T) is None


def test_highest_maps_to_zero_string():
    word = longest_word("C", 3)
    d = build_cartan("C", 3)
    g = generate_crystal(d, (1, 0, 1))
    assert adapted_string(g.highest, word).entries == (0,) * word.length


def test_string_to_element_error_reports_step():
    with pytest.raises(ValueError, match="step"):
        string_to_element(build_cartan("A", 1), (2,), (3,))


def test_in_S_lambda_rejects_exceptional():
    with pytest.raises(ValueError):
        in_S_lambda(build_cartan("G", 2), (1, 1), (0,) * 6)
    with pytest.raises(ValueError):
        enumerate_S_lambda(build_cartan("F", 4), (1, 0, 0, 0))


def test_enumerate_a1():
    d = build_cartan("A", 1)
    assert [s.entries for s in enumerate_S_lambda(d, (2,))] == [(0,), (1,), (2,)]
    assert not in_S_lambda(d, (2,), (3,))


def test_enumerate_zero_weight():
    assert [s.entries for s in enumerate_S_lambda(B3, (0, 0, 0))] == [(0,) * 9]


def test_enumerate_b2_vector():
    assert len(enumerate_S_lambda(build_cartan("B", 2), (1, 0))) == 5


@pytest.mark.parametrize("tag,rank,lam", [
    ("A", 3, (1, 0, 1)),
    ("B", 3, (1, 1, 1)),
    ("C", 3, (0, 1, 1)),
    ("D", 4, (1, 0, 1, 1)),
])
def test_bijection_with_crystal(tag, rank, lam):
    d = build_cartan(tag, rank)
    word = longest_word(tag, rank)
    g = generate_crystal(d, lam)
    strings = enumerate_S_lambda(d, lam)
    assert len(strings) == len(g)
    extracted = sorted(adapted_string(el, word).entries for el in g.elements)
    assert extracted == [s.entries for s in strings]
    for s in strings[::7]:
        el = string_to_element(d, lam, s)
        assert adapted_string(el, word).entries == s.entries
        assert in_S(d, s) and in_S_lambda(d, lam, s)


def test_monotonicity_in_lambda():
    d = build_cartan("B", 2)
    small = {s.entries for s in enumerate_S_lambda(d, (1, 1))}
    big = {s.entries for s in enumerate_S_lambda(d, (2, 1))}
    assert small <= big


def _kostant_counts(datum, h):
    counts = Counter({(0,) * datum.rank: 1})
    for r in positive_roots(datum):
        new = Counter(counts)
        for beta, c in list(counts.items()):
            b = list(beta)
            while True:
                b = [x + y for x, y in zip(b, r)]
                if sum(b) > h:
                    break
                new[tuple(b)] += c
        counts = new
    return Counter({b: c for b, c in counts.items() if 0 < sum(b) <= h})


def _string_counts(datum, h):
    flat = longest_word(datum.type_tag, datum.rank).flat
    out = Counter()

    def rec(pos, rem, acc):
        if pos == len(flat):
            if sum(acc) and in_S(datum, tuple(acc)):
                beta = [0] * datum.rank
                for t, a in enumerate(acc):
                    beta[flat[t] - 1] += a
                out[tuple(beta)] += 1
            return
        for v in range(rem + 1):
            acc.append(v)
            rec(pos + 1, rem - v, acc)
            acc.pop()

    rec(0, h, [])
    return out


@pytest.mark.parametrize("tag,rank,h", [
    ("G", 2, 4), ("F", 4, 3), ("B", 3, 3), ("C", 3, 3), ("D", 4, 3),
    ("A", 3, 3), ("E", 6, 3), ("E", 7, 2), ("E", 8, 2),
])
def test_kostant_counts(tag, rank, h):
    """#{a in S : weight beta} must equal the Kostant partition K(beta)."""
    datum = build_cartan(tag, rank)
    assert _string_counts(datum, h) == _kostant_counts(datum, h)


def test_string_json_shape():
    s = make_string(B3, (2, 3, 1, 0, 9, 8, 4, 2, 1))
    j = s.to_json()
    assert j["entries"] == [2, 3, 1, 0, 9, 8, 4, 2, 1]
    assert j["blocks"] == [[2], [3, 1, 0], [9, 8, 4, 2, 1]]
