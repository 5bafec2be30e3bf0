"""Cartan data for finite types, positive roots, and the fixed reduced words for w0.

Everything here is exact integer arithmetic.  A Cartan datum is immutable and
carries the Cartan matrix, the minimal positive symmetrizers delta_i, and the
symmetric bilinear form (alpha_i | alpha_j) = delta_i * a_ij.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

VALID_TYPES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True)
class CartanDatum:
    type_tag: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]

    def a(self, i: int, j: int) -> int:
        """Cartan matrix entry a_ij, 1-based indices."""
        return self.cartan_matrix[i - 1][j - 1]

    def bilinear(self, i: int, j: int) -> int:
        """(alpha_i | alpha_j) = delta_i a_ij, 1-based."""
        return self.symmetrizers[i - 1] * self.a(i, j)

    @property
    def index_set(self) -> range:
        return range(1, self.rank + 1)

    @property
    def is_classical(self) -> bool:
        return self.type_tag in ("A", "B", "C", "D")

    def __str__(self) -> str:
        return f"{self.type_tag}{self.rank}"


@dataclass(frozen=True)
class ReducedWord:
    """Block-structured word for w0: blocks s_1, ..., s_n, flat word, lengths."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for b in self.blocks for x in b)

    @property
    def block_lengths(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def length(self) -> int:
        return sum(len(b) for b in self.blocks)


@lru_cache(maxsize=None)
def build_cartan(type_tag: str, rank: int) -> CartanDatum:
    """Build the Cartan datum for the fixed diagram labelings of each type."""
    t = type_tag.upper()
    if t not in VALID_TYPES:
        raise ValueError(f"unknown type {type_tag!r}")
    n = rank
    ok = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 3,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }[t]
    if not ok:
        raise ValueError(f"invalid rank {rank} for type {t}")

    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        # 1-based node labels
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if t in ("A", "B", "C"):
        for i in range(1, n):
            link(i, i + 1)
        if t == "B":
            a[n - 1][n - 2] = -2  # a_{n,n-1} = -2, node n short
        elif t == "C":
            a[n - 2][n - 1] = -2  # a_{n-1,n} = -2, node n long
    elif t == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif t == "E":
        # Labeling extends the D5 labeling (chain 1-2-3, fork tips 4 and 5
        # at node 3) by the chain 5-6(-7-8).  This is the unique labeling
        # under which the fixed w0 words below are reduced.
        for i, j in [(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (6, 7), (7, 8)]:
            if j <= n:
                link(i, j)
    elif t == "F":
        link(1, 2)
        link(2, 3, aij=-1, aji=-2)  # a_{32} = -2, nodes 3,4 short
        link(3, 4)
    else:  # G2
        link(1, 2, aij=-3, aji=-1)

    delta = _min_symmetrizers(a)
    return CartanDatum(t, n, tuple(tuple(r) for r in a), delta)


def _min_symmetrizers(a) -> tuple[int, ...]:
    """Minimal positive integers delta with delta_i a_ij = delta_j a_ji."""
    n = len(a)
    num = [None] * n  # delta as Fractions relative to node 0
    num[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and a[i][j] != 0 and num[j] is None:
                # delta_j = delta_i a_ij / a_ji
                num[j] = num[i] * a[i][j] / a[j][i]
                stack.append(j)
    lcm_den = 1
    for x in num:
        lcm_den = lcm_den * x.denominator // _gcd(lcm_den, x.denominator)
    ints = [int(x * lcm_den) for x in num]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(x, y):
    while y:
        x, y = y, x % y
    return x


# ---------------------------------------------------------------------------
# Fixed block-structured words for the longest Weyl group element


def _blocks_A(n):
    return tuple(tuple(range(n + 1 - k, n + 1)) for k in range(1, n + 1))


def _blocks_BC(n):
    blocks = []
    for k in range(1, n + 1):
        up = tuple(range(n + 1 - k, n + 1))
        down = tuple(range(n - 1, n - k, -1))
        blocks.append(up + down)
    return tuple(blocks)


def _blocks_D(n):
    blocks = [(n,), (n - 1,)]
    for k in range(3, n + 1):
        up = tuple(range(n + 1 - k, n - 1))
        down = tuple(range(n - 2, n - k, -1))
        blocks.append(up + (n, n - 1) + down)
    return tuple(blocks)


_E6_LAST = (6, 5, 3, 4, 2, 1, 3, 2, 5, 3, 4, 6, 5, 3, 2, 1)
_E7_LAST = (7, 6, 5, 3, 4, 2, 1, 3, 2, 5, 3, 4, 6, 5, 3, 2, 1,
            7, 6, 5, 3, 4, 2, 3, 5, 6, 7)
_E8_LAST = (8, 7, 6, 5, 3, 4, 2, 1, 3, 2, 5, 3, 4, 6, 5, 3, 2, 1,
            7, 6, 5, 3, 4, 2, 3, 5, 6, 7,
            8, 7, 6, 5, 3, 4, 2, 1, 3, 2, 5, 3, 4, 6, 5, 3, 2, 1,
            7, 6, 5, 3, 4, 2, 3, 5, 6, 7, 8)
_F4_LAST = (4, 3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4)


def _blocks_E(n):
    blocks = list(_blocks_D(5))  # nodes 1..5 form a D5 under the E labeling
    blocks.append(_E6_LAST)
    if n >= 7:
        blocks.append(_E7_LAST)
    if n == 8:
        blocks.append(_E8_LAST)
    return tuple(blocks)


@lru_cache(maxsize=None)
def longest_word(type_tag: str, rank: int) -> ReducedWord:
    """The fixed block-structured reduced word for the longest element."""
    datum = build_cartan(type_tag, rank)  # validates type/rank
    t, n = datum.type_tag, datum.rank
    if t == "A":
        return ReducedWord(_blocks_A(n))
    if t in ("B", "C"):
        return ReducedWord(_blocks_BC(n))
    if t == "D":
        return ReducedWord(_blocks_D(n))
    if t == "E":
        return ReducedWord(_blocks_E(n))
    if t == "F":
        return ReducedWord(_blocks_BC(3) + (_F4_LAST,))
    return ReducedWord(((1,), (2, 1, 2, 1, 2)))  # G2


# ---------------------------------------------------------------------------
# Positive roots and reduced-word verification


def simple_reflection_image(datum: CartanDatum, i: int, beta: tuple[int, ...]):
    """s_i(beta) for beta in root coordinates, 1-based i."""
    pairing = sum(c * datum.a(i, j + 1) for j, c in enumerate(beta))
    out = list(beta)
    out[i - 1] -= pairing
    return tuple(out)


def positive_roots(datum: CartanDatum) -> tuple[tuple[int, ...], ...]:
    """All positive roots as coefficient tuples, by closure under reflections.

    Deterministic order: by height, then lexicographic.
    """
    n = datum.rank
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simples)
    frontier = set(simples)
    while frontier:
        new = set()
        for beta in frontier:
            for i in datum.index_set:
                img = simple_reflection_image(datum, i, beta)
                if all(c >= 0 for c in img) and img not in roots:
                    new.add(img)
        roots |= new
        frontier = new
    return tuple(sorted(roots, key=lambda b: (sum(b), b)))


def verify_reduced_longest(datum: CartanDatum, word) -> bool:
    """True iff the word is reduced and represents w0.

    Standard inversion check: appending s_i to w keeps the word reduced iff
    w(alpha_i) is a positive root; w0 additionally needs length = #positive
    roots.
    """
    word = tuple(word)
    n = datum.rank
    for i in word:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range for rank {n}")
    # w maintained column-wise: cols[j] = w(alpha_{j+1}) in root coordinates
    cols = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    for i in word:
        img = cols[i - 1]
        if any(c < 0 for c in img):
            return False  # length would drop: not reduced
        # right-multiply by s_i: new w' = w s_i; w'(alpha_j) = w(s_i alpha_j)
        new_cols = []
        for j in range(n):
            si_aj = simple_reflection_image(datum, i, tuple(
                1 if k == j else 0 for k in range(n)))
            img_j = tuple(
                sum(c * cols[m][k] for m, c in enumerate(si_aj))
                for k in range(n))
            new_cols.append(img_j)
        cols = new_cols
    return len(word) == len(positive_roots(datum))


# ---------------------------------------------------------------------------
# Weights


def check_dominant(lam, rank: int) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) != rank:
        raise ValueError(f"weight needs {rank} coefficients, got {len(lam)}")
    if any(x < 0 for x in lam):
        raise ValueError(f"weight {lam} is not dominant")
    return lam


def coroot_pairing(datum: CartanDatum, lam, beta) -> Fraction:
    """<lam, beta^vee> = 2 (lam|beta) / (beta|beta), lam in fundamental coords."""
    d = datum.symmetrizers
    lam_beta = sum(c * d[i] * lam[i] for i, c in enumerate(beta))
    beta_beta = sum(
        ci * cj * d[i] * datum.a(i + 1, j + 1)
        for i, ci in enumerate(beta) for j, cj in enumerate(beta) if ci and cj)
    return Fraction(2 * lam_beta, beta_beta)
