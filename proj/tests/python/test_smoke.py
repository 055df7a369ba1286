"""Smoke tests for the python bindings."""

import binpart as bp


def test_sequences():
    assert bp.s2(5) == 2
    assert bp.nu2(12) == 2
    assert bp.nu2(0) is None
    assert bp.ptm(0) == 1
    assert bp.ptm(1) == -1
    assert bp.paperfold(6) == -1
    assert bp.evil_number(1) == 3


def test_partition_streams():
    assert bp.b_values(4) == [1, 1, 2, 2, 4]
    assert bp.b3_values(3) == [1, 3, 9, 19]
    assert bp.bm_values(2, 2) == [1, 2, 5]
    assert bp.bm_residues(1, 20, 5)[20] == 28
    assert bp.b_valuation(20) == 2
    # arbitrary precision round trip through python ints
    big = bp.b_values(4096)[4096]
    assert big > 10**9
    assert bp.nu2(big) in (1, 2)


def test_squares():
    assert not bp.is_three_squares(7)
    assert bp.is_three_squares(6)
    assert bp.is_two_squares(2)
    assert bp.r2(5) == 8
    assert bp.factorize(60) == {2: 2, 3: 1, 5: 1}
    x, y, z = bp.find_three_square_rep(59)
    assert x * x + y * y + z * z == 59
    assert bp.count_special_reps(2, "x2y2z4")


def test_characterizations():
    assert bp.chi(10) == 1
    assert bp.in_s1(20)["member"]
    assert not bp.in_s1(7)["member"]
    assert bp.in_s3(9)["member"]
    assert bp.beta(2) == 7
    assert bp.c_a(1, 0) == 0
    assert bp.f_values(3) == [10, 18, 34]
    assert bp.count_s1(100) == 8


def test_dfao_and_verify():
    import json

    j = json.loads(bp.ptm_dfao_json())
    assert j["states"] == 2
    assert bp.run_dfao_json(bp.ptm_dfao_json(), 3, "msb") == 1
    rep = bp.verify_family("b-mod32")
    assert rep["status"] == "pass"
    assert "b-mod32" in bp.family_ids()
