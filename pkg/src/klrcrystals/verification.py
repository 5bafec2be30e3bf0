"""Cross-module oracles and acceptance drivers: the dimension formula, the
string/crystal bijection suites, and a full replay of the odd-orthogonal
rank-3 worked example.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import (
    CartanDatum,
    build_cartan,
    check_dominant,
    coroot_pairing,
    longest_word,
    positive_roots,
)
from .crystals import (
    component_highest,
    generate_crystal,
    stats,
    tensor_apply,
)
from .decomposition import decompose, reconstruct, theta
from .strings import adapted_string, enumerate_S_lambda, string_to_element, triangle


@dataclass
class TestReport:
    case: str
    expected: object = None
    actual: object = None
    status: str = "ok"
    runtime: float = 0.0
    details: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "ok"

    def fail(self, message: str, expected=None, actual=None):
        self.status = "fail"
        self.details.append({"message": message,
                             "expected": expected, "actual": actual})

    def to_json(self) -> dict:
        return {"case": self.case, "expected": self.expected,
                "actual": self.actual, "status": self.status,
                "runtime": round(self.runtime, 6), "details": self.details}


def weyl_dimension(datum: CartanDatum, lam) -> int:
    """Dimension of the irreducible highest-weight module, exact."""
    lam = check_dominant(lam, datum.rank)
    rho = (1,) * datum.rank
    shifted = tuple(x + 1 for x in lam)
    out = Fraction(1)
    for beta in positive_roots(datum):
        out *= coroot_pairing(datum, shifted, beta) / coroot_pairing(
            datum, rho, beta)
    if out.denominator != 1:
        raise AssertionError("dimension product is not an integer")
    return int(out)


def run_bijection_suite(datum: CartanDatum, lam,
                        size_cap: int = 10 ** 6) -> TestReport:
    """Exhaustive string/crystal consistency checks for one highest weight."""
    lam = check_dominant(lam, datum.rank)
    report = TestReport(case=f"bijection {datum} lambda={list(lam)}")
    start = time.perf_counter()
    dim = weyl_dimension(datum, lam)
    report.expected = dim
    if dim > size_cap:
        report.status = "skipped"
        report.details.append({"message": f"dimension {dim} over cap"})
        return report
    word = longest_word(datum.type_tag, datum.rank)
    graph = generate_crystal(datum, lam)
    strings = enumerate_S_lambda(datum, lam)
    report.actual = len(graph)
    if len(graph) != dim:
        report.fail("crystal size != dimension formula", dim, len(graph))
    if len(strings) != dim:
        report.fail("string-cone size != dimension formula", dim,
                    len(strings))
    extracted = sorted(adapted_string(el, word).entries
                       for el in graph.elements)
    enumerated = [s.entries for s in strings]
    if extracted != enumerated:
        report.fail("extracted strings != enumerated string cone")
    if len(set(extracted)) != len(extracted):
        report.fail("adapted strings are not distinct")
    for el in graph.elements:
        s = adapted_string(el, word).entries
        if string_to_element(datum, lam, s) != el:
            report.fail("string round trip broke", actual=list(s))
            break
        dec = decompose(datum, s, lam)
        if dec.eta > dec.bound:
            report.fail("eta exceeds its bound", dec.bound, dec.eta)
            break
        if reconstruct(datum, lam, dec) != el:
            report.fail("reconstruction round trip broke", actual=list(s))
            break
    report.runtime = time.perf_counter() - start
    return report


def desk_scale_cases(max_rank: int = 4, weight_budget: int = 3):
    """All (datum, lambda) pairs of the exhaustive desk-scale suite."""
    data = []
    for rank in range(2, max_rank + 1):
        for tag in ("A", "B", "C", "D"):
            if tag == "D" and rank < 3:
                continue
            data.append(build_cartan(tag, rank))
    for datum in data:
        for total in range(0, weight_budget + 1):
            for lam in itertools.product(range(total + 1),
                                         repeat=datum.rank):
                if sum(lam) == total:
                    yield datum, lam


def run_full_suite(max_rank: int = 4, weight_budget: int = 3,
                   size_cap: int = 10 ** 6) -> list[TestReport]:
    return [run_bijection_suite(datum, lam, size_cap)
            for datum, lam in desk_scale_cases(max_rank, weight_budget)]


def replay_example_b3() -> TestReport:
    """Replay every quantitative claim of the rank-3 worked example."""
    report = TestReport(case="example-b3")
    start = time.perf_counter()
    datum = build_cartan("B", 3)
    lam = (1, 1, 3)
    word = longest_word("B", 3)
    entries = (3, 3, 3, 0, 4, 3, 5, 2, 1)
    T = string_to_element(datum, lam, entries)

    if adapted_string(T, word).entries != entries:
        report.fail("string of T", list(entries))
    tri = triangle(datum, entries)
    if tri.rows != ((3,), (3, 3, 0), (4, 3, 5, 2, 1)):
        report.fail("triangle of T", actual=[list(r) for r in tri.rows])

    theta_expected = {(1, 3): 1, (1, 4): 1,
                      (2, 2): 1, (2, 3): 1, (2, 4): 1, (2, 5): 0,
                      (3, 1): 1, (3, 2): 0, (3, 3): 1, (3, 4): 0,
                      (3, 5): 1, (3, 6): 1}
    for (i, j), want in theta_expected.items():
        got = theta(datum, tri, i, j)
        if got != want:
            report.fail(f"theta[{i},{j}]", want, got)

    dec = decompose(datum, entries, lam)
    blocks_expected = (
        (((-3, 0), 1), ((-3, 3), 1)),
        (((-2, -3), 1), ((-2, 0), 1), ((-2, 3), 1)),
        (((-1, -2), 1), ((-1, 0), 1), ((-1, 2), 1), ((-1, 1), 1)),
    )
    got_blocks = tuple(tuple(((f.a, f.b), f.mult) for f in blk)
                       for blk in dec.blocks)
    if got_blocks != blocks_expected:
        report.fail("factor blocks", actual=str(got_blocks))
    if dec.eta != 9:
        report.fail("eta", 9, dec.eta)
    if dec.bound != 21:
        report.fail("bound", 21, dec.bound)
    if dec.nk_words[2] != ((1, 4), (2, 3), (3, 5), (2, 2), (1, 1)):
        report.fail("third block word", actual=list(dec.nk_words[2]))

    f1 = tensor_apply("f", 1, T)
    f2 = tensor_apply("f", 2, T)
    if adapted_string(f1, word).entries != (3, 2, 1, 0, 5, 4, 7, 2, 1):
        report.fail("string after lowering at 1")
    if adapted_string(f2, word).entries != (3, 4, 3, 0, 4, 3, 5, 2, 1):
        report.fail("string after lowering at 2")
    if tensor_apply("f", 3, T) is not None:
        report.fail("lowering at 3 should vanish")

    # the raising chain T_1 .. T_9 along the string, with its vanishing
    # epsilon milestones
    chain = [(3, 3), (2, 3), (3, 3), (2, 0), (1, 4), (2, 3), (3, 5), (2, 2),
             (1, 1)]
    current = T
    tees = []
    for i, power in chain:
        for _ in range(power):
            current = tensor_apply("e", i, current)
            if current is None:
                report.fail("raising chain vanished early")
                report.runtime = time.perf_counter() - start
                return report
        tees.append(current)
    eps9, _, _ = stats(tees[8])
    if eps9 != (0, 0, 0):
        report.fail("epsilon at the top of the chain", (0, 0, 0), eps9)
    eps4, _, _ = stats(tees[3])
    if (eps4[1], eps4[2]) != (0, 0):
        report.fail("epsilon_{2,3} at the fourth stop", (0, 0),
                    (eps4[1], eps4[2]))
    eps1, _, _ = stats(tees[0])
    if eps1[2] != 0:
        report.fail("epsilon_3 at the first stop", 0, eps1[2])
    if component_highest(T, (2, 3)) != tees[3]:
        report.fail("partial highest-weight stop mismatch")
    if component_highest(T, (1, 2, 3)) != tees[8]:
        report.fail("full raising does not reach the top")
    report.runtime = time.perf_counter() - start
    return report
