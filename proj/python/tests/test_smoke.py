import json

import pytest

import rchopf


def test_rc1_document():
    doc = json.loads(rchopf.compute_rc(1))
    assert doc["kind"] == "tensor2"
    assert doc["hash"] == "fnv1a64:bb7ce2670dd598db"
    assert rchopf.content_hash(rchopf.compute_rc(1)) == doc["hash"]


def test_rc_sizes():
    assert [rchopf.rc_terms(n) for n in range(4)] == [1, 3, 24, 108]


def test_verifiers():
    assert rchopf.verify_twist(3)["passed"]
    assert rchopf.verify_counit(3)["passed"]
    report = rchopf.verify_lemma1(5)
    assert report["passed"] and len(report["orders"]) == 6


def test_twist_coefficient():
    assert rchopf.twist_coefficient(3, "3/2", "2", "3") == "-1/64"
    assert rchopf.twist_coefficient(2, "0", "2", "3") == "97/1540"
    with pytest.raises(rchopf.SingularDenominator):
        rchopf.twist_coefficient(2, "0", "-1/2", "3")


def test_brackets():
    delta = ["0", "1", "-24", "252", "-1472"]
    assert rchopf.bracket("E4", "E6", 1, prec=5) == [str(-3456 * int(c)) for c in delta]
    assert rchopf.rc_bracket("E4", "E6", 2, prec=8) == rchopf.bracket("E4", "E6", 2, prec=8)
    assert rchopf.eisenstein(4, 3) == ["1", "240", "2160"]


def test_bad_document():
    with pytest.raises(rchopf.DocumentError):
        rchopf.content_hash("{}")


def test_cli():
    code, out, _ = rchopf.run_cli(["verify", "appendix"])
    assert code == 0
    assert "verify appendix: PASS" in out
    assert rchopf.run_cli(["compute", "Q"])[0] == 2
