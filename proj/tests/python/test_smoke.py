import pytest

import gorlab


def test_presets_and_modules():
    A = gorlab.algebra("truncated_poly(3)")
    assert A.rank == 3 and A.base == "Q"
    k = gorlab.module(A, "k")
    assert k.generators == 1
    with pytest.raises(ValueError):
        gorlab.module(A, "nonsense")


def test_gorenstein_verdicts():
    assert gorlab.gorenstein_check(gorlab.algebra("upper_triangular(2)"))["status"] == "Gorenstein"
    fat = gorlab.gorenstein_check(gorlab.algebra("commutative_fat_point"))
    assert fat["status"] == "NotGorenstein"
    assert fat["failing"]["kind"] == "InfiniteCertified"


def test_tate_cyclic():
    A = gorlab.algebra("group_algebra(cyclic,3,Z)")
    Z = gorlab.module(A, "Z")
    groups = gorlab.tate_ext(Z, Z, (-2, 2))
    texts = {row["degree"]: row["group"]["text"] for row in groups["degrees"]}
    assert texts == {-2: "Z/3", -1: "0", 0: "Z/3", 1: "0", 2: "Z/3"}


def test_duality_and_report():
    A = gorlab.algebra("truncated_poly(2)")
    k = gorlab.module(A, "k")
    assert gorlab.verify_serre_duality_field(k, k, (-2, 2))["pass"]
    assert gorlab.trace_pairing_probe(k, k)["pass"]
    r = gorlab.report(A, {"sections": ["gorenstein"]})
    assert r["schema"] == "gorlab.report/1"
    assert r["exit_code"] == 0


def test_omega_hat_raises_for_fat_point():
    with pytest.raises(gorlab.PerfectionError):
        gorlab.omega_hat(gorlab.algebra("commutative_fat_point"))


def test_json_round_trip():
    A = gorlab.algebra("quantum_exterior(2)")
    B = gorlab.algebra_from_json(A.to_json())
    assert B.rank == 4
    M = gorlab._gorlab.module_from_json(A, gorlab.module(A, "k").to_json())
    assert M.generators == 1
