from fractions import Fraction

import pytest

import rhcgt


def test_evaluate_sum():
    e = rhcgt.Engine()
    out = e.evaluate("9;3,2 + 4;2,1")
    assert out["ls"] == 9 and out["rs"] == -2
    assert isinstance(out["ls"], Fraction)
    assert out["outcome"] == "N"
    assert e.evaluate("lj:11;1,1 + 1/2")["ls"] == Fraction(21, 2)


def test_canonical_form():
    assert rhcgt.Engine().canonical("4;2,2") == "{2,{2|{1|-1}}|-2,{{1|-1}|-2}}"


def test_thermograph_matches_formulas():
    e = rhcgt.Engine()
    for a, b in [(5, 3), (3, 5), (5, 4), (2, 1)]:
        n = a + b + 12
        t = e.thermograph(n, a, b)
        assert t["temperature"] == rhcgt.main_temperature(n, a, b)
        assert t["mean"] == rhcgt.main_mean(n, a, b)
        assert t == e.thermograph(n, a, b, ruleset="lj")
        assert t["left_wall"][0][0] == 0
    assert e.size > 0


def test_svg():
    svg = rhcgt.Engine().svg(12, 2, 1)
    assert svg.startswith("<?xml") and svg.rstrip().endswith("</svg>")


def test_number_theory_helpers():
    assert rhcgt.mp_from_pair(31, 20) == (7, 2, 4)
    assert rhcgt.golden_class(5, 3) != rhcgt.golden_class(3, 5)
    assert rhcgt.lj_stops_formula(10, 5, 3) == (7, 3)
    wins, moves = rhcgt.euclid_winner(2, 1)
    assert wins and moves


def test_lj_path():
    steps = rhcgt.lj_path(50, 14, 10)
    assert steps[0] == ("Right", 10, (40, 4, 10))
    assert steps[-1][2] == (0, 0, 6)
    assert rhcgt.lj_path(50, 14, 10, start="L")[0][0] == "Left"


def test_verify_suite():
    assert "table1" in rhcgt.suite_names()
    ok, checks = rhcgt.verify("table1")
    assert ok and checks and all(p for _, p, _ in checks)


def test_errors_map_to_python_exceptions():
    e = rhcgt.Engine()
    with pytest.raises(ValueError):
        e.evaluate("9;3")
    with pytest.raises(ValueError):
        e.thermograph(5, 1, 1, ruleset="xx")
    small = rhcgt.Engine(50)
    with pytest.raises(rhcgt.StoreCapacityExceeded):
        small.evaluate("40;9,7")
    assert issubclass(rhcgt.StoreCapacityExceeded, MemoryError)
