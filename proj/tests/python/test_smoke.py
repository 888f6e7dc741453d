from fractions import Fraction

import pytest

import fubini


def test_stirling_and_fubini_numbers():
    assert fubini.stirling2(4, 2) == 7
    assert fubini.stirling1(4, 2) == 11
    assert [fubini.fubini_number(n) for n in range(7)] == [1, 1, 3, 13, 75, 541, 4683]
    assert fubini.fubini_number(20) == 2677687796244384203115


def test_fubini_polynomials():
    assert fubini.fubini_poly(3) == [0, 1, 6, 6]
    assert fubini.fubini_poly(2, at=Fraction(-1, 2)) == 0
    assert fubini.fubini_poly(4, at=1) == 75
    assert fubini.fubini_two_var(2) == [[0, 1, 2], [0, 2, 0], [1, 0, 0]]


def test_bernoulli():
    assert fubini.bernoulli(1) == Fraction(-1, 2)
    assert fubini.bernoulli(12) == Fraction(-691, 2730)
    assert fubini.p_bernoulli(2, 2) == Fraction(-1, 20)


def test_apostol():
    num, den = fubini.apostol(2)
    assert num == [0, -2]
    assert den == [1, -2, 1]
    assert fubini.apostol(2, at=2) == -4
    assert fubini.apostol_pretty(2) == "(-2λ)/(λ-1)^2"
    with pytest.raises(ValueError):
        fubini.apostol(2, at=1)


def test_verifier():
    ids = {e["id"] for e in fubini.list_identities()}
    assert {"eq26_integral", "eq24_corrected_split", "ab_guoqi"} <= ids
    reports = fubini.verify("eq26_integral", n_max=30)
    assert len(reports) == 30
    assert all(r["status"] == "pass" for r in reports)
    with pytest.raises(fubini.UsageError):
        fubini.verify("no_such_identity")
    result = fubini.verify_all("quick")
    assert result["summary"]["failed"] == 0
    with pytest.raises(ValueError):
        fubini.verify_all("slow")
