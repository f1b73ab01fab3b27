import json

import pytest

import persist


def test_digit_product_and_trajectory():
    assert persist.digit_product(39) == 27
    assert persist.digit_product(7) == 7
    assert persist.digit_product(10**40 - 1) == 9**40
    t = persist.trajectory(39)
    assert t["steps"] == [39, 27, 14, 4]
    assert (t["target"], t["height"]) == (4, 3)
    assert persist.trajectory(2677889)["height"] == 8


def test_equations():
    ids = persist.equation_ids()
    assert len(ids) == 44
    assert persist.lc_eval("5.23", [4, 0, 3, 1, 2]) == 107163


def test_solve_json():
    sets = json.loads(persist.solve("5.02"))
    accepted = sorted(int(r["value"]) for r in sets[0]["records"] if r["status"] == "accepted")
    assert accepted == [35, 135, 315]
    with pytest.raises(KeyError):
        persist.solve("0.00")


def test_prove_and_brute():
    proof = json.loads(persist.prove(3))[0]
    assert proof["proved"] and proof["height_bound"] == 1
    assert persist.brute("5.02", 12) == [([1, 0], 2, 1), ([2, 0], 5, 0), ([2, 1], 4, 1)]
    with pytest.raises(persist.GuardExceeded):
        persist.brute("5.24", 40)
    with pytest.raises(ValueError):
        persist.prove(2)


def test_scan_and_bounds():
    scan = json.loads(persist.scan(99))
    assert (scan["max_height"], scan["max_height_witness"]) == (4, 77)
    assert json.loads(persist.scan(99, mode="multiset"))["height_histogram"] == scan["height_histogram"]
    bound = persist.two_bound("4,4,7")
    assert (bound["a"], bound["witness"]) == (7, 111744)
    assert persist.selftest()
