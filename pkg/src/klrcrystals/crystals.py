"""Fundamental and spin crystals for classical types, tensor words, and B(lambda).

Tensor words are sequences of letter codes over a per-(type, rank) alphabet.
Vector letters are displayed as signed integers: -i for the barred letter,
0 for the middle letter of an odd orthogonal type, +i for the unbarred
letter.  Spin letters are sign vectors.

The tensor convention is fixed as: the signature of a word for index i is
read left to right, each factor contributing its eps_i minuses followed by
its phi_i pluses; f acts on the factor with the leftmost surviving plus and
e on the one with the rightmost surviving minus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels
from .cartan import CartanDatum, check_dominant


@dataclass(frozen=True)
class Alphabet:
    """Letter tables for one classical datum (vector + spin letters)."""

    datum: CartanDatum
    n_vector: int
    eps: np.ndarray = field(repr=False, compare=False)
    phi: np.ndarray = field(repr=False, compare=False)
    ff: np.ndarray = field(repr=False, compare=False)
    ee: np.ndarray = field(repr=False, compare=False)
    vector_values: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return self.ff.shape[0]

    @property
    def has_spin(self) -> bool:
        return self.size > self.n_vector

    def code_of_value(self, value: int) -> int:
        return self.vector_values.index(value)

    def spin_code(self, signs) -> int:
        """Code of the spin letter with the given +1/-1 sign sequence."""
        m = 0
        for j, s in enumerate(signs):
            if s < 0:
                m |= 1 << j
        return self.n_vector + m

    def spin_signs(self, code: int) -> tuple[int, ...]:
        m = code - self.n_vector
        return tuple(-1 if m >> j & 1 else 1 for j in range(self.datum.rank))

    def letter_name(self, code: int) -> str:
        if code < self.n_vector:
            return str(self.vector_values[code])
        signs = self.spin_signs(code)
        return "(" + "".join("+" if s > 0 else "-" for s in signs) + ")"


def _vector_arrows(datum: CartanDatum):
    """(i, source value, target value) triples of the fundamental crystal."""
    t, n = datum.type_tag, datum.rank
    arrows = []
    if t == "A":
        for i in range(1, n + 1):
            arrows.append((i, -i, -(i + 1)))
        return arrows
    for i in range(1, n - 1):
        arrows.append((i, -i, -(i + 1)))
        arrows.append((i, i + 1, i))
    if n >= 2 and t != "D":
        arrows.append((n - 1, -(n - 1), -n))
        arrows.append((n - 1, n, n - 1))
    if t == "B":
        arrows.append((n, -n, 0))
        arrows.append((n, 0, n))
    elif t == "C":
        arrows.append((n, -n, n))
    else:  # D
        arrows.append((n - 1, -(n - 1), -n))
        arrows.append((n - 1, n, n - 1))
        arrows.append((n, -(n - 1), n))
        arrows.append((n, -n, n - 1))
    return arrows


@lru_cache(maxsize=None)
def alphabet(datum: CartanDatum) -> Alphabet:
    if not datum.is_classical:
        raise ValueError(f"no letter crystal for exceptional type {datum}")
    t, n = datum.type_tag, datum.rank
    if t == "A":
        values = tuple(-i for i in range(1, n + 2))
    elif t == "B":
        values = tuple(-i for i in range(1, n + 1)) + (0,) + tuple(
            range(n, 0, -1))
    else:
        values = tuple(-i for i in range(1, n + 1)) + tuple(range(n, 0, -1))
    nv = len(values)
    n_spin = 2 ** n if t in ("B", "D") else 0
    size = nv + n_spin
    ff = np.full((size, n), -1, dtype=np.int32)
    ee = np.full((size, n), -1, dtype=np.int32)
    code = {v: c for c, v in enumerate(values)}
    for i, src, dst in _vector_arrows(datum):
        ff[code[src], i - 1] = code[dst]
        ee[code[dst], i - 1] = code[src]
    for m in range(n_spin):
        c = nv + m
        signs = [-1 if m >> j & 1 else 1 for j in range(n)]
        for i in range(1, n):
            j = i - 1 if (t == "B" or i < n - 1) else n - 2
            if signs[j] > 0 > signs[j + 1]:
                ff[c, i - 1] = nv + (m | 1 << j) - (1 << (j + 1))
        if t == "B":
            if signs[n - 1] > 0:
                ff[c, n - 1] = nv + (m | 1 << (n - 1))
        else:  # D
            if signs[n - 2] > 0 and signs[n - 1] > 0:
                ff[c, n - 1] = nv + m + (1 << (n - 2)) + (1 << (n - 1))
    for c in range(nv, size):
        for i0 in range(n):
            if ff[c, i0] >= 0:
                ee[ff[c, i0], i0] = c
    # eps/phi are distances to the ends of the letter's i-string (B_n's
    # middle chain barred-n -> 0 -> n has length 2, so these exceed 1 there)
    eps = np.zeros((size, n), dtype=np.int32)
    phi = np.zeros((size, n), dtype=np.int32)
    for c in range(size):
        for i0 in range(n):
            x = c
            while ee[x, i0] >= 0:
                x = ee[x, i0]
                eps[c, i0] += 1
            x = c
            while ff[x, i0] >= 0:
                x = ff[x, i0]
                phi[c, i0] += 1
    ff.setflags(write=False)
    ee.setflags(write=False)
    eps.setflags(write=False)
    phi.setflags(write=False)
    return Alphabet(datum, nv, eps, phi, ff, ee, values)


@dataclass(frozen=True)
class Element:
    """A tensor word over the alphabet of its datum."""

    datum: CartanDatum
    word: tuple[int, ...]

    def __str__(self) -> str:
        ab = alphabet(self.datum)
        return " ".join(ab.letter_name(c) for c in self.word) or "()"


def _arr(word) -> np.ndarray:
    return np.array(word, dtype=np.int32)


def tensor_apply(op: str, i: int, element: Element) -> Element | None:
    """Apply e_i or f_i ('e'/'f') to a tensor word; None encodes the null result."""
    datum = element.datum
    if not 1 <= i <= datum.rank:
        raise ValueError(f"index {i} out of range for {datum}")
    ab = alphabet(datum)
    if op not in ("e", "f"):
        raise ValueError(f"op must be 'e' or 'f', got {op!r}")
    w = _arr(element.word)
    ok = _kernels.apply_op(
        w, i - 1, 1 if op == "f" else 0, ab.eps, ab.phi, ab.ff, ab.ee,
        _kernels.make_scratch(len(w)))
    if not ok:
        return None
    return Element(datum, tuple(int(x) for x in w))


def stats(element: Element):
    """((eps_i)_i, (phi_i)_i, wt) of a tensor word; wt in fundamental coordinates."""
    ab = alphabet(element.datum)
    n = element.datum.rank
    w = _arr(element.word)
    scratch = _kernels.make_scratch(len(w))
    eps_out, phi_out = [], []
    for i0 in range(n):
        e, p, _, _ = _kernels.signature_scan(w, i0, ab.eps, ab.phi, scratch)
        eps_out.append(int(e))
        phi_out.append(int(p))
    diff = ab.phi - ab.eps
    wt = tuple(int(sum(diff[c, i0] for c in element.word)) for i0 in range(n))
    return tuple(eps_out), tuple(phi_out), wt


def weight(element: Element) -> tuple[int, ...]:
    return stats(element)[2]


def highest_weight_word(datum: CartanDatum, lam) -> tuple[int, ...]:
    """The tensor word b_lambda: spin factors, then column words, verified highest."""
    return _highest_weight_word(datum, check_dominant(lam, datum.rank))


@lru_cache(maxsize=None)
def _highest_weight_word(datum: CartanDatum, lam) -> tuple[int, ...]:
    ab = alphabet(datum)
    t, n = datum.type_tag, datum.rank
    word: list[int] = []
    if t == "B":
        word += [ab.spin_code([1] * n)] * lam[n - 1]
        col_range = range(n - 1, 0, -1)
    elif t == "D":
        word += [ab.spin_code([1] * (n - 1) + [-1])] * lam[n - 2]
        word += [ab.spin_code([1] * n)] * lam[n - 1]
        col_range = range(n - 2, 0, -1)
    else:
        col_range = range(n, 0, -1)
    for i in col_range:
        column = [ab.code_of_value(-j) for j in range(1, i + 1)]
        word += column * lam[i - 1]
    el = Element(datum, tuple(word))
    eps, _, wt = stats(el)
    if any(eps) or wt != lam:
        raise AssertionError(
            f"highest-weight word self-check failed for {datum}, lambda={lam}: "
            f"eps={eps}, wt={wt}")
    return el.word


@dataclass(frozen=True)
class CrystalGraph:
    datum: CartanDatum
    lam: tuple[int, ...] | None
    elements: tuple[Element, ...]
    arrows: dict = field(compare=False, repr=False)  # (word, i) -> word
    highest: Element

    def __len__(self) -> int:
        return len(self.elements)


def _close_under_lowering(datum: CartanDatum, seeds) -> CrystalGraph:
    ab = alphabet(datum)
    n = datum.rank
    seen = set(seeds)
    queue = list(seeds)
    arrows = {}
    scratch = _kernels.make_scratch(len(seeds[0]) if seeds[0] else 1)
    while queue:
        word = queue.pop()
        w = _arr(word)
        for i0 in range(n):
            w2 = w.copy()
            if _kernels.apply_op(w2, i0, 1, ab.eps, ab.phi, ab.ff, ab.ee,
                                 scratch):
                tgt = tuple(int(x) for x in w2)
                arrows[(word, i0 + 1)] = tgt
                if tgt not in seen:
                    seen.add(tgt)
                    queue.append(tgt)
    ordered = tuple(Element(datum, w) for w in sorted(seen))
    highest = [el for el in ordered if not any(stats(el)[0])]
    if len(highest) != 1:
        raise AssertionError(
            f"expected a unique highest element, found {len(highest)}")
    return CrystalGraph(datum, None, ordered, arrows, highest[0])


def vector_crystal(datum: CartanDatum) -> CrystalGraph:
    """The fundamental letter crystal, one-letter tensor words."""
    ab = alphabet(datum)
    graph = _close_under_lowering(datum, [(0,)])
    if len(graph) != ab.n_vector:
        raise AssertionError("fundamental crystal closure missed letters")
    return graph


def spin_crystal(datum: CartanDatum, which: int) -> CrystalGraph:
    """Spin crystal for spin node `which`: n for B; n-1 or n for D."""
    t, n = datum.type_tag, datum.rank
    if t == "B":
        if which != n:
            raise ValueError(f"type B has one spin node, {n}")
        seed = [1] * n
    elif t == "D":
        if which == n:
            seed = [1] * n
        elif which == n - 1:
            seed = [1] * (n - 1) + [-1]
        else:
            raise ValueError(f"type D spin nodes are {n - 1} and {n}")
    else:
        raise ValueError(f"type {t} has no spin crystal")
    ab = alphabet(datum)
    return _close_under_lowering(datum, [(ab.spin_code(seed),)])


def generate_crystal(datum: CartanDatum, lam) -> CrystalGraph:
    """B(lambda) as the closure of b_lambda under all lowering operators."""
    lam = check_dominant(lam, datum.rank)
    b = highest_weight_word(datum, lam)
    graph = _close_under_lowering(datum, [b])
    return CrystalGraph(datum, lam, graph.elements, graph.arrows,
                        Element(datum, b))


def component_highest(element: Element, index_subset) -> Element:
    """Raise with e_i, i in the subset, until all those eps_i vanish."""
    subset = sorted(set(index_subset))
    n = element.datum.rank
    for i in subset:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range for {element.datum}")
    ab = alphabet(element.datum)
    w = _arr(element.word)
    _kernels.raise_on_subset(
        w, np.array([i - 1 for i in subset], dtype=np.int32),
        ab.eps, ab.phi, ab.ee, _kernels.make_scratch(len(w)))
    return Element(element.datum, tuple(int(x) for x in w))


def to_dot(graph: CrystalGraph) -> str:
    """DOT rendering with arrows labeled by their index."""
    ab = alphabet(graph.datum)
    idx = {el.word: k for k, el in enumerate(graph.elements)}

    def label(word):
        return " ".join(ab.letter_name(c) for c in word) or "()"

    lines = ["digraph crystal {"]
    for el in graph.elements:
        lines.append(f'  n{idx[el.word]} [label="{label(el.word)}"];')
    for (src, i), dst in sorted(graph.arrows.items(),
                                key=lambda kv: (idx[kv[0][0]], kv[0][1])):
        lines.append(f'  n{idx[src]} -> n{idx[dst]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
