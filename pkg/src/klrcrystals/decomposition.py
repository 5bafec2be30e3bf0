"""Delta-factor decompositions of adapted strings and crystal reconstruction.

Letters of the base crystal are encoded as signed integers: -i for the
barred letter, 0 for the odd orthogonal middle letter, +i for the unbarred
letter.  For each string in S, every block k yields a boxed product of
two-letter modules Delta_(a,b) with multiplicities given by the theta
case split on triangle rows; the decomposition determines the element and
can be replayed on the crystal side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanDatum, check_dominant, longest_word
from .strings import Triangle, in_S, make_string, triangle


# ---------------------------------------------------------------------------
# Letters of the base crystal, the hat map, order, and paths


def base_letters(datum: CartanDatum) -> tuple[int, ...]:
    """All letters, from highest to lowest (D's middle pair in order -n, n)."""
    t, n = datum.type_tag, datum.rank
    if t == "A":
        return tuple(-i for i in range(1, n + 2))
    if t == "B":
        return tuple(-i for i in range(1, n + 1)) + (0,) + tuple(
            range(n, 0, -1))
    return tuple(-i for i in range(1, n + 1)) + tuple(range(n, 0, -1))


def hat(datum: CartanDatum, i: int) -> int:
    """The letter assigned to position i of the lowering chain."""
    t, n = datum.type_tag, datum.rank
    if 1 <= i <= n or (t == "A" and i == n + 1):
        return -i
    if t == "B":
        if i == n + 1:
            return 0
        if n + 2 <= i <= 2 * n + 1:
            return 2 * n + 2 - i
    elif t in ("C", "D"):
        if n + 1 <= i <= 2 * n:
            return 2 * n + 1 - i
    raise ValueError(f"position {i} out of range for {datum}")


def _level(datum: CartanDatum, a: int) -> int:
    """Depth in the order; D's incomparable pair shares a level."""
    t, n = datum.type_tag, datum.rank
    if a not in base_letters(datum):
        raise ValueError(f"{a} is not a letter of the {datum} base crystal")
    if a < 0:
        lvl = -a - 1
        if t == "D" and a == -n:
            lvl = n - 1
        return lvl
    if a == 0:
        return n
    if t == "B":
        return 2 * n + 1 - a
    if t == "C":
        return 2 * n - a
    return 2 * n - 1 - a


def delta_indicator(datum: CartanDatum, a: int, b: int) -> int:
    """1 iff a >= b in the base-crystal order (0 for D's incomparable pair)."""
    if a == b:
        return 1
    if datum.type_tag == "D" and {a, b} == {-datum.rank, datum.rank}:
        return 0
    return 1 if _level(datum, a) < _level(datum, b) else 0


def _lowering_steps(datum: CartanDatum, a: int):
    """Outgoing arrows of letter a as (index, target) pairs."""
    t, n = datum.type_tag, datum.rank
    out = []
    if a < 0:
        i = -a
        if t == "A":
            if i <= n:
                out.append((i, -(i + 1)))
        elif t == "B":
            out.append((i, 0 if i == n else -(i + 1)))
        elif t == "C":
            out.append((i, n if i == n else -(i + 1)))
        else:  # D
            if i <= n - 2:
                out.append((i, -(i + 1)))
            elif i == n - 1:
                out.append((n, n))       # canonical route first
                out.append((n - 1, -n))
            else:  # i == n
                out.append((n, n - 1))
    elif a == 0:
        out.append((n, n))
    else:
        if t == "D" and a == n:
            if n >= 2:
                out.append((n - 1, n - 1))
        elif a >= 2:
            out.append((a - 1, a - 1))
    return out


def kashiwara_word(datum: CartanDatum, a: int, b: int,
                   route: str = "canonical") -> tuple[int, ...]:
    """Arrow labels of the path from a down to b in the base crystal.

    For D with a above the fork and b below it, two paths exist; the
    canonical one passes through the unbarred letter n, route="alt" gives
    the other.
    """
    if route not in ("canonical", "alt"):
        raise ValueError(f"route must be 'canonical' or 'alt', got {route!r}")
    if not (delta_indicator(datum, a, b) and a != b):
        raise ValueError(f"{a} does not dominate {b} in the {datum} order")
    paths = []

    def walk(x, acc):
        if x == b:
            paths.append(tuple(acc))
            return
        for i, y in _lowering_steps(datum, x):
            if y == b or delta_indicator(datum, y, b):
                acc.append(i)
                walk(y, acc)
                acc.pop()

    walk(a, [])
    if not paths:
        raise AssertionError(f"no path from {a} to {b}")  # pragma: no cover
    if route == "alt":
        if len(paths) < 2:
            raise ValueError(f"no alternative path from {a} to {b}")
        return paths[1]
    return paths[0]


# ---------------------------------------------------------------------------
# theta multiplicities and their inversion


def theta(datum: CartanDatum, tri: Triangle, i: int, j: int) -> int:
    """Multiplicity theta_{ij} from triangle row i (out-of-support reads 0)."""
    t, n = datum.type_tag, datum.rank

    def tt(jj):
        return tri.t(i, jj)

    if t in ("A", "C"):
        return tt(j) - tt(j + 1)
    if t == "B":
        if j <= n - 2:
            return tt(j) - tt(j + 1)
        if j == n - 1:
            return tt(n - 1) - (tt(n) + 1) // 2
        if j == n:
            return (tt(n) + 1) // 2 - tt(n) // 2
        if j == n + 1:
            return tt(n) // 2 - tt(n + 1)
        return tt(j - 1) - tt(j)
    # type D
    if j <= n - 3:
        return tt(j) - tt(j + 1)
    if j == n - 2:
        return tt(n - 2) - max(tt(n - 1), tt(n))
    if j == n - 1:
        return max(0, tt(n) - tt(n - 1))
    if j == n:
        return max(0, tt(n - 1) - tt(n))
    if j == n + 1:
        return min(tt(n - 1), tt(n)) - tt(n + 1)
    return tt(j - 1) - tt(j)


def counts_to_t(datum: CartanDatum, theta_row) -> tuple[int, ...]:
    """Invert the theta case split on one row; errors on infeasible rows."""
    th = list(theta_row)
    t = datum.type_tag
    if any(x < 0 for x in th):
        raise ValueError("theta entries must be nonnegative")
    if t in ("A", "C"):
        out = []
        acc = 0
        for x in reversed(th):
            acc += x
            out.append(acc)
        return tuple(reversed(out))
    if t == "B":
        if len(th) % 2:
            raise ValueError("type B theta rows have even length 2i")
        i = len(th) // 2
        # positions j = n+1-i .. n+i relative: mid entry theta_n at index i-1
        if th[i - 1] not in (0, 1):
            raise ValueError("type B middle theta entry must be 0 or 1")
        right = []  # t_{n+1} .. t_{n-1+i}, built from the right
        acc = 0
        for x in reversed(th[i + 1:]):
            acc += x
            right.append(acc)
        right.reverse()
        floor_half = th[i] + (right[0] if right else 0)
        ceil_half = floor_half + th[i - 1]
        t_mid = floor_half + ceil_half
        left = [ceil_half]  # t_{n-1}, then leftwards
        for x in reversed(th[:i - 1]):
            left.append(x + left[-1])
        left = left[:0:-1] + [t_mid] if i > 1 else [t_mid]
        return tuple(left + right)
    if t == "D":
        if len(th) % 2 == 0:
            raise ValueError("type D theta rows have odd length 2r+1")
        r = len(th) // 2
        # indices j = n-r .. n+r; middles theta_{n-1}, theta_n at r-1, r
        if th[r - 1] > 0 and th[r] > 0:
            raise ValueError(
                "type D middle theta entries cannot both be positive")
        right = []
        acc = 0
        for x in reversed(th[r + 2:]):
            acc += x
            right.append(acc)
        right.reverse()
        mid_min = th[r + 1] + (right[0] if right else 0)
        t_nm1 = mid_min + th[r]       # theta_n = max(0, t_{n-1} - t_n)
        t_n = mid_min + th[r - 1]     # theta_{n-1} = max(0, t_n - t_{n-1})
        left = [th[r - 2] + max(t_nm1, t_n)] if r >= 2 else []
        for x in reversed(th[:r - 2]):
            left.append(x + left[-1])
        left.reverse()
        return tuple(left + [t_nm1, t_n] + right)
    raise ValueError(f"no triangle rows for type {t}")


# ---------------------------------------------------------------------------
# Decomposition


@dataclass(frozen=True)
class DeltaFactor:
    a: int
    b: int
    mult: int

    def __post_init__(self):
        if self.mult < 1:
            raise ValueError("stored factors need multiplicity >= 1")

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "mult": self.mult}

    def __str__(self) -> str:
        s = f"D({self.a},{self.b})"
        return s if self.mult == 1 else s + f"^{self.mult}"


@dataclass(frozen=True)
class Decomposition:
    datum: CartanDatum
    string: tuple[int, ...]
    blocks: tuple[tuple[DeltaFactor, ...], ...]
    nk_words: tuple[tuple[tuple[int, int], ...], ...]  # (index, exponent)
    eta: int
    bound: int | None  # n * lambda(h) when lambda was supplied

    def to_json(self) -> dict:
        return {
            "string": list(self.string),
            "blocks": [[f.to_json() for f in blk] for blk in self.blocks],
            "nk_words": [[[i, a] for i, a in w] for w in self.nk_words],
            "eta": self.eta,
            "bound": self.bound,
        }


def delta_factors(datum: CartanDatum, string, i: int) -> tuple[DeltaFactor, ...]:
    """The factor list of block i, zero multiplicities omitted."""
    if not datum.is_classical:
        raise ValueError(f"decomposition needs a classical type, not {datum}")
    n = datum.rank
    if not 1 <= i <= n:
        raise ValueError(f"block index {i} out of range")
    entries = make_string(datum, string).entries
    tri = triangle(datum, entries)
    t = datum.type_tag
    out = []
    if t == "D":
        if i == 1:
            m = tri.t(1, n - 1)
            return (DeltaFactor(-(n - 1), n, m),) if m else ()
        if i == 2:
            m = tri.t(1, n)
            return (DeltaFactor(-(n - 1), -n, m),) if m else ()
        row, lo, hi = i - 1, n + 1 - i, n - 1 + i
    elif t == "A":
        row, lo, hi = i, n + 1 - i, n
    elif t == "B":
        row, lo, hi = i, n + 1 - i, n + i
    else:
        row, lo, hi = i, n + 1 - i, n - 1 + i
    src = hat(datum, n + 1 - i)
    for j in range(lo, hi + 1):
        m = theta(datum, tri, row, j)
        if m:
            out.append(DeltaFactor(src, hat(datum, j + 1), m))
    return tuple(out)


def _lambda_h(datum: CartanDatum, lam) -> int:
    """lambda(h) for the type's bounding coweight h."""
    t, n = datum.type_tag, datum.rank
    if t == "A":
        coef = [1] * n
    elif t == "B":
        coef = [2] * (n - 1) + [1]
    elif t == "C":
        coef = [2] * n
    else:
        coef = [2] * (n - 2) + [1, 1]
    return sum(c * x for c, x in zip(coef, lam))


def decompose(datum: CartanDatum, string, lam=None) -> Decomposition:
    """Full decomposition: all blocks, N_k words, eta, and the bound if lam given."""
    entries = make_string(datum, string).entries
    if not in_S(datum, entries):
        raise ValueError(f"string {entries} is not in S for {datum}")
    word = longest_word(datum.type_tag, datum.rank)
    blocks = tuple(delta_factors(datum, entries, i)
                   for i in range(1, datum.rank + 1))
    s = make_string(datum, entries)
    nk = tuple(tuple(zip(word.blocks[k], s.blocks[k]))
               for k in range(datum.rank))
    eta = sum(f.mult for blk in blocks for f in blk)
    bound = None
    if lam is not None:
        lam = check_dominant(lam, datum.rank)
        bound = datum.rank * _lambda_h(datum, lam)
        if eta > bound:
            raise AssertionError(
                f"eta={eta} exceeds the bound {bound}")  # pragma: no cover
    return Decomposition(datum, entries, blocks, nk, eta, bound)


# ---------------------------------------------------------------------------
# Reconstruction on the crystal side


def _merged_counts(datum: CartanDatum, k: int,
                   factors) -> tuple[tuple[int, int], ...]:
    """Per-position exponents of block k's word from its factor list alone.

    Each factor's lowering word is matched against the positions of s_k left
    to right ("adding up vertically"); the two consecutive n-steps of a B
    path land on the single middle position.
    """
    s_k = longest_word(datum.type_tag, datum.rank).blocks[k - 1]
    counts = [0] * len(s_k)
    for f in factors:
        path = kashiwara_word(datum, f.a, f.b)
        p = 0
        prev = None
        for letter in path:
            if (datum.type_tag == "B" and letter == datum.rank
                    and prev == letter):
                counts[p - 1] += f.mult  # second middle step, same slot
                continue
            while s_k[p] != letter:
                p += 1
            counts[p] += f.mult
            p += 1
            prev = letter
    return tuple(zip(s_k, counts))


def reconstruct(datum: CartanDatum, lam, decomposition: Decomposition):
    """Replay the decomposition on B(lambda).

    The per-position lowering exponents are derived from the factor lists
    alone (not the stored N_k words) and applied from the last block down to
    the first, innermost position first.
    """
    from .strings import string_to_element  # local: strings has no dep on us

    entries = []
    for k in range(1, datum.rank + 1):
        entries.extend(a for _, a in
                       _merged_counts(datum, k, decomposition.blocks[k - 1]))
    try:
        return string_to_element(datum, lam, tuple(entries))
    except ValueError as exc:
        raise ValueError(f"inconsistent decomposition: {exc}") from exc
