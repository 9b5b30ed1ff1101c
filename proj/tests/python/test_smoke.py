from fractions import Fraction

import pytest

import kstab


def test_lct_braid():
    assert kstab.lct_braid(5)["lct"] == Fraction(2, 5)
    with pytest.raises(ValueError):
        kstab.lct_braid(1)
    with pytest.raises(kstab.SizeError):
        kstab.lct_braid(20)


def test_lct_arrangement():
    cert = kstab.lct_arrangement([[1, 0], [0, 1], [1, 1]])
    assert cert["lct"] == Fraction(2, 3)
    assert cert["minimizers"][0]["count"] == 3
    assert kstab.diagonal_discrepancy(4, Fraction(1, 2)) == -1


def test_gamma():
    assert kstab.gamma_at_k(3)["gamma_k"] == Fraction(6, 7)
    assert kstab.gamma_at_k(2, matrix=True)["gamma_k"] == Fraction(4, 5)
    report = kstab.gamma_report(4)
    assert report["gamma"] == 1
    assert report["verdict"] == "semistable_not_stable"
    assert kstab.veronese_determinant(0) == "1"


def test_fitting():
    assert kstab.interpolate([(0, 1), (1, 3), (2, 7)]) == "k^2 + k + 1"
    assert kstab.df_coefficient([0, Fraction(-1, 2), Fraction(-1, 2)], [1, 2], 1) == Fraction(1, 2)


def test_donaldson_futaki():
    report = kstab.donaldson_futaki([{"p": 1}], s=1)
    assert report["DF"] == Fraction(1, 2)
    assert report["DF0"] == 2
    assert kstab.donaldson_futaki([{"p": 1}], s=2)["DF0"] == 0
    assert kstab.donaldson_futaki([{"p": 3}])["DF0"] == Fraction(16, 3)
    with pytest.raises(ValueError):
        kstab.donaldson_futaki([{"p": 2}, {"p": 1}])
    with pytest.raises(kstab.StabilizationError):
        kstab.donaldson_futaki([{"p": 1}], k_max=10)


def test_monomial():
    gens, text = kstab.multiplier_ideal([([(1, 0), (0, 1)], 2)])
    assert text == "(x, y)"
    assert sorted(map(tuple, gens)) == [(0, 1), (1, 0)]
    assert kstab.lct_monomial([(2, 0), (0, 3)]) == Fraction(5, 6)
    result = kstab.summation_check([(0, 0)], 0, [[(1, 0)], [(0, 1)]], 2)
    assert result["holds"]


def test_verify_quick():
    card = kstab.verify(seed=42, quick=True)
    assert card["all_passed"]
    assert [c["id"] for c in card["criteria"]] == ["C%d" % i for i in range(1, 11)]
