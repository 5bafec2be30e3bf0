"""Ungraded characters: two-letter module characters, shuffle products, and
the quantum Serre validator.

A character is a finite multiset of index sequences, stored sparsely and
homogeneous: every sequence has the same content vector alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cartan import CartanDatum
from .decomposition import DeltaFactor, Decomposition, kashiwara_word


@dataclass(frozen=True)
class Character:
    rank: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        alpha = None
        for seq, coef in self.terms.items():
            if coef < 1:
                raise ValueError("character coefficients must be positive")
            a = _content(self.rank, seq)
            if alpha is None:
                alpha = a
            elif a != alpha:
                raise ValueError("character is not homogeneous")

    @property
    def alpha(self) -> tuple[int, ...]:
        for seq in self.terms:
            return _content(self.rank, seq)
        return (0,) * self.rank

    @property
    def mass(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "terms": [{"seq": list(s), "coef": c}
                      for s, c in sorted(self.terms.items())],
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for s, c in sorted(self.terms.items()):
            word = "(" + ",".join(map(str, s)) + ")"
            bits.append(word if c == 1 else f"{c}*{word}")
        return " + ".join(bits)


def _content(rank: int, seq) -> tuple[int, ...]:
    alpha = [0] * rank
    for i in seq:
        if not 1 <= i <= rank:
            raise ValueError(f"index {i} out of range 1..{rank}")
        alpha[i - 1] += 1
    return tuple(alpha)


def character(rank: int, *seqs) -> Character:
    """Character from plain sequences, repeats accumulating coefficients."""
    terms: dict[tuple[int, ...], int] = {}
    for s in seqs:
        s = tuple(s)
        terms[s] = terms.get(s, 0) + 1
    return Character(rank, terms)


def coefficient(x: Character, sequence) -> int:
    return x.terms.get(tuple(sequence), 0)


def ch_delta(datum: CartanDatum, factor) -> Character:
    """Character of a single two-letter module (multiplicity ignored)."""
    a, b = (factor.a, factor.b) if isinstance(factor, DeltaFactor) else factor
    t, n = datum.type_tag, datum.rank
    if t == "D" and a < 0 and -a <= n - 1 and 0 < b <= n - 1:
        # the path splits at the fork; both routes contribute one word
        return character(n,
                        kashiwara_word(datum, a, b),
                        kashiwara_word(datum, a, b, route="alt"))
    word = kashiwara_word(datum, a, b)
    if t == "B" and a < 0 and b > 0:
        return Character(n, {word: 2})
    return character(n, word)


def _shuffle_words(u: tuple, v: tuple) -> dict[tuple, int]:
    memo: dict[tuple[int, int], dict[tuple, int]] = {}

    def rec(i: int, j: int) -> dict[tuple, int]:
        key = (i, j)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if i == len(u):
            out = {v[j:]: 1}
        elif j == len(v):
            out = {u[i:]: 1}
        else:
            out = {}
            for seq, c in rec(i + 1, j).items():
                k = (u[i],) + seq
                out[k] = out.get(k, 0) + c
            for seq, c in rec(i, j + 1).items():
                k = (v[j],) + seq
                out[k] = out.get(k, 0) + c
        memo[key] = out
        return out

    return rec(0, 0)


def shuffle(x: Character, y: Character) -> Character:
    """Bilinear shuffle product of two characters."""
    if x.rank != y.rank:
        raise ValueError("characters live over different index sets")
    terms: dict[tuple[int, ...], int] = {}
    for u, cu in x.terms.items():
        for v, cv in y.terms.items():
            for seq, c in _shuffle_words(u, v).items():
                terms[seq] = terms.get(seq, 0) + cu * cv * c
    return Character(x.rank, terms)


def shuffle_mass_bound(lengths, masses=None) -> int:
    """Multinomial upper bound on the mass of an iterated shuffle."""
    total = math.factorial(sum(lengths))
    for l in lengths:
        total //= math.factorial(l)
    for m in (masses or ()):
        total *= m
    return total


def decomposition_character(datum: CartanDatum, dec: Decomposition,
                            cap: int | None = None) -> Character:
    """Iterated shuffle of all factor characters, multiplicities included.

    With a cap, raises ValueError before expanding anything whose predicted
    mass (a multinomial in the factor word lengths) exceeds it.
    """
    chars = []
    for blk in dec.blocks:
        for f in blk:
            ch = ch_delta(datum, f)
            chars.extend([ch] * f.mult)
    if cap is not None:
        lengths = [sum(c.alpha) for c in chars]
        if shuffle_mass_bound(lengths, [c.mass for c in chars]) > cap:
            raise ValueError("predicted character mass exceeds the cap")
    out = Character(datum.rank, {(): 1})
    for ch in chars:
        out = shuffle(out, ch)
    return out


def serre_check(datum: CartanDatum, x: Character) -> list[dict]:
    """Validate the quantum Serre coefficient identities; returns violations.

    For every context (prefix, suffix) and unequal index pair i, j appearing
    in x, checks the identity matching a_{ij}: the transposition equality for
    a_{ij} = 0, the three-term identity for a_{ij} = -1, and the four-term
    identity for a_{ij} = -2.
    """

    def coef(pre, mid, suf):
        return x.terms.get(pre + mid + suf, 0)

    violations = []
    seen = set()

    def record(relation, i, j, pre, suf, lhs, rhs):
        if lhs != rhs:
            violations.append({
                "relation": relation, "i": i, "j": j,
                "prefix": list(pre), "suffix": list(suf),
                "lhs": lhs, "rhs": rhs,
            })

    for seq in x.terms:
        for p in range(len(seq)):
            for length in (2, 3, 4):
                if p + length > len(seq):
                    continue
                window = seq[p:p + length]
                letters = set(window)
                if len(letters) != 2:
                    continue
                for cand in letters:
                    j = (letters - {cand}).pop()
                    if window.count(cand) != length - 1:
                        continue
                    i, aij = cand, datum.a(cand, j)
                    pre, suf = seq[:p], seq[p + length:]
                    key = (length, i, j, pre, suf)
                    if key in seen:
                        continue
                    seen.add(key)
                    if length == 2 and aij == 0:
                        record("transpose", i, j, pre, suf,
                               coef(pre, (i, j), suf), coef(pre, (j, i), suf))
                    elif length == 3 and aij == -1:
                        record("serre-1", i, j, pre, suf,
                               2 * coef(pre, (i, j, i), suf),
                               coef(pre, (i, i, j), suf)
                               + coef(pre, (j, i, i), suf))
                    elif length == 4 and aij == -2:
                        record("serre-2", i, j, pre, suf,
                               coef(pre, (i, i, i, j), suf)
                               + 3 * coef(pre, (i, j, i, i), suf),
                               coef(pre, (j, i, i, i), suf)
                               + 3 * coef(pre, (i, i, j, i), suf))
    return violations
