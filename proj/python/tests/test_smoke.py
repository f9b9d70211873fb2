import json

import pytest

import soergel


def test_group_orders():
    assert soergel.group_order("A2") == 6
    assert soergel.group_order("B2") == 8
    assert soergel.group_order("A3") == 24


def test_hom_rank():
    assert soergel.hom_rank("sts") == [0, 2]
    assert soergel.hom_rank("") == [0]


def test_standard_multiplicities():
    n = soergel.standard_multiplicities("sts")
    assert sum(n.values()) == 8
    assert n["e"] == 2


def test_kl_data():
    assert soergel.kl_polynomial("t", "tsut", type="A3") == [1, 1]
    assert soergel.kl_expand("sts") == {"s": {0: 1}, "sts": {0: 1}}


def test_bimodules():
    ranks = sorted(s["rank"] for s in soergel.decompose("sts"))
    assert ranks == [2, 6]
    h = soergel.hom_dimensions("sts")
    assert h["shifts"] == [0, 2]
    assert h["dims"][-2] == 1 and h["dims"][0] == 3


def test_pair():
    r = soergel.compare_pair("sts")
    assert r["hom_ok"] and r["end_ok"]
    assert r["shifts"] == r["shifts_prime"]


def test_run():
    code, out, _ = soergel.run(["decat", "hom-rank", "--word", "sts"])
    assert code == 0
    assert json.loads(out)["shifts"] == [0, 2]
    code, _, err = soergel.run([])
    assert code == 1 and err


def test_errors():
    with pytest.raises(ValueError):
        soergel.hom_rank("sx")
    with pytest.raises(soergel.CapExceeded):
        soergel.hom_dimensions("s", "s", 0, 40)
