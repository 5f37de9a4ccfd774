import pytest

import dworkcong as dc


def test_exact_arithmetic():
    assert dc.padic_ord(12, 2) == 2
    assert dc.padic_ord(50, 5) == 2
    assert dc.embed_rational("1/4", 5, 2) == 19
    assert dc.hensel_unit_root(-2, 5, 2) == 13
    assert dc.gamma_star(3) == "2"
    assert dc.gamma_star(-2) == "1/2"
    with pytest.raises(Exception):
        dc.padic_ord(0, 5)


def test_ct_and_q_series():
    assert dc.ct_sequence("example-1d", 4) == ["1", "0", "2", "0", "6"]
    assert dc.q_series("example-1d", 3, 1, 5) == [1, 0, 2, 0, 0]
    b = dc.ct_sequence("dwork-quartic", 4)
    assert b[2] == "1/4" and b[4] == "9/64"


def test_congruence_verifiers():
    assert dc.verify_mev("example-1d", 3, 2, 27)["holds"]
    assert dc.verify_any_m("example-1d", 3, 6, 18)["holds"]
    assert dc.verify_derivative("example-1d", 3, 9, 18)["holds"]
    bad = dc.verify_mev("example-1d", 3, 1, 18, perturb=2)
    assert not bad["holds"] and "failure" in bad


def test_unit_roots():
    r = dc.unit_root_legendre(2, 5, 2)
    assert r["a_p"] == -2
    assert r["lambda_trunc"] == 13 == r["lambda_hensel"]
    assert r["agree"]
    assert dc.count_points_legendre(2, 5) == -2
    assert dc.legendre_truncation(5, 1, 5) == [1, 4, 1, 0, 0]


def test_ahypergeometric():
    exps = dc.section6_exponents()
    basis = dc.kernel_basis(exps)
    assert len(basis) == 2
    psi = dc.psi_tilde(exps, "interior", 9, 8)
    entry = psi[(5, 5)]
    assert entry[(1, 0, 0, 1, -2)] == 2
    assert entry[(2, 1, 1, 0, -4)] == 12
    rep = dc.verify_main5(exps, "interior", 3, 1, 9)
    assert rep["holds"]
    chk = dc.cone_check(exps)
    assert chk["pointed"]
