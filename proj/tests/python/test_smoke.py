from fractions import Fraction

import pytest

import rbdq


def e(i):
    return [1 if k == i else 0 for k in range(4)]


def test_multiplication_table():
    assert rbdq.multiply(e(0), e(2)) == e(2)
    assert rbdq.multiply(e(1), e(3)) == [0, 0, 0, 0]
    x = [Fraction(1, 2), 3, -1, 2]
    y = [2, Fraction(-1, 3), 5, 0]
    assert rbdq.multiply(x, y) == rbdq.multiply(y, x)


def test_verification_and_witness():
    zero = [[0] * 4 for _ in range(4)]
    assert rbdq.is_rota_baxter(zero, 0)
    identity = [e(i) for i in range(4)]
    assert not rbdq.is_rota_baxter(identity, 0)
    assert rbdq.defect_witness(identity, 0) == (0, 0, [-1, 0, 0, 0])
    minus_identity = [[-v for v in row] for row in identity]
    assert rbdq.is_rota_baxter(minus_identity, 1)


def test_block_family_round_trip():
    m = rbdq.build_family("W0_BlockFamily", [1, 2, 4])
    assert rbdq.is_rota_baxter(m, 0)
    result = rbdq.classify(m, 0)
    assert result["verdict"] == "InFamily"
    assert result["family"]["family"] == "W0_BlockFamily"
    with pytest.raises(ValueError):
        rbdq.build_family("W0_BlockFamily", [1, 2, 0])


def test_generate_and_reduce():
    text = rbdq.generate_system("sym")
    assert text.count("\n(") + 1 >= 64
    first = [line for line in text.splitlines() if line.startswith("(0,0,e0)")][0]
    assert first == "(0,0,e0): a11^2 + 2*a12*a21 + 2*a13*a31 + 2*a14*a41 + a11*l"
    system = rbdq.generate_system(0, format="json")
    assert len(system["polys"]) == 64
    basis = rbdq.reduce(system)
    assert basis["order"].startswith("grevlex")
    assert len(basis["generators"]) > 0
    assert rbdq.reduce(text, saturate=True) == rbdq.reduce(text, saturate=True)


def test_limits_and_errors():
    with pytest.raises(rbdq.LimitExceeded):
        rbdq.reduce(rbdq.generate_system(0), max_pairs=1)
    with pytest.raises(ValueError):
        rbdq.reduce("x: a11 +* a12")
    with pytest.raises(ValueError):
        rbdq.is_rota_baxter([[0] * 4] * 3)


def test_audit_and_selftest():
    report = rbdq.audit(0, grid=[0, 1])
    assert report["solutions"] >= 1
    checks = rbdq.selftest()
    assert all(passed for name, mandatory, passed, _ in checks if mandatory)
