"""Dimension oracle, bijection suite driver, worked-example replay."""

import pytest

from klrcrystals.cartan import build_cartan
from klrcrystals.verification import (
    desk_scale_cases,
    replay_example_b3,
    run_bijection_suite,
    weyl_dimension,
)


def test_weyl_dimension_values():
    assert weyl_dimension(build_cartan("A", 1), (1,)) == 2
    assert weyl_dimension(build_cartan("A", 2), (1, 1)) == 8
    assert weyl_dimension(build_cartan("B", 2), (1, 0)) == 5
    assert weyl_dimension(build_cartan("B", 3), (0, 0, 1)) == 8
    assert weyl_dimension(build_cartan("D", 4), (1, 0, 0, 0)) == 8
    assert weyl_dimension(build_cartan("G", 2), (0, 1)) == 14
    assert weyl_dimension(build_cartan("B", 3), (1, 1, 3)) == 4096
    with pytest.raises(ValueError):
        weyl_dimension(build_cartan("A", 2), (1, -1))


def test_bijection_suite_cases():
    rep = run_bijection_suite(build_cartan("D", 4), (1, 0, 0, 0))
    assert rep.passed and rep.expected == rep.actual == 8
    trivial = run_bijection_suite(build_cartan("C", 3), (0, 0, 0))
    assert trivial.passed and trivial.actual == 1
    capped = run_bijection_suite(build_cartan("B", 3), (1, 1, 3), size_cap=10)
    assert capped.status == "skipped"


def test_desk_scale_case_list():
    cases = list(desk_scale_cases(max_rank=2, weight_budget=1))
    names = {(str(d), lam) for d, lam in cases}
    assert ("A2", (0, 0)) in names and ("B2", (1, 0)) in names
    assert all(str(d) != "D2" for d, _ in cases)
    assert len(list(desk_scale_cases(max_rank=3, weight_budget=1))) > 0


def test_replay_example():
    rep = replay_example_b3()
    assert rep.passed, rep.details
    assert rep.to_json()["status"] == "ok"
    assert rep.runtime < 10
