from fractions import Fraction

import pytest

import racahops as r


def F(s):
    return Fraction(s)


def test_scalar_kernel():
    assert r.pochhammer("2", 3) == "24"
    assert r.pochhammer("-3", 5) == "0"
    assert r.gen_binomial("1/2", 2) == "-1/8"
    assert r.hyp_terminating(["-1", "2"], ["3"], 1, "1") == "1/3"


def test_admissibility():
    assert r.check_admissible(["1/2", "3/2"], 4, "hahn") == []
    violations = r.check_admissible(["-1", "2"], 3, "hahn")
    assert violations and violations[0].startswith("lambda1 ")
    with pytest.raises(r.RacahopsError):
        r.check_admissible(["1"], 2, "hahn")


def test_jacobi_and_values():
    assert r.jacobi_poly(0, "1/2", "3/2") == "1"
    # P_1 = ((lam+lam')v + lam-lam')/2
    assert r.jacobi_poly(1, "1", "3") == "-1 + 2 * v"
    assert r.homogenized_jacobi(1, "1", "2") == "-2 * x + 1 * y"
    assert r.classical_value("racah", 1, 1, ["1", "1", "1"], 1) == "-1/3"


def test_transition_table():
    t = r.transition_table("hahn", ["1", "2"], 3)
    assert t["gamma"] == "5/2"
    assert t["values"][0][0] == "1"
    # biorthogonality: sum_k Q_{k,l} Qt_{k,l'} = delta Gamma
    N = 3
    for l in range(N + 1):
        for lp in range(N + 1):
            s = sum(
                F(t["values"][k][l]) * F(t["tilde"][k][lp]) for k in range(N + 1)
            )
            assert s == (F(t["gamma"]) if l == lp else 0)


def test_convolution_matrices_invert():
    fwd = r.convolution_matrix("racah", ["1/2", "3/4", "1/3"], 3, True)
    inv = r.convolution_matrix("racah", ["1/2", "3/4", "1/3"], 3, False)
    n = len(fwd)
    for i in range(n):
        for j in range(n):
            s = sum(F(fwd[i][k]) * F(inv[k][j]) for k in range(n))
            assert s == (1 if i == j else 0)


def test_schemes():
    schemes = r.enumerate_schemes(4)
    assert len(schemes) == 18
    assert schemes[0] == "1|2|3|4 -> 12|3|4 -> 123|4 -> 1234"
    assert len(r.dedupe_families(4)) == 15
    assert len(r.dedupe_families(5)) == 105

    s3 = "1|2|3 -> 12|3 -> 123"
    assert r.scheme_eigenvector(s3, [0, 0], ["1", "2", "3"]) == "1"
    assert r.scheme_eigenvector(s3, [1, 0], ["1", "2", "3"]) == "-2 * x1 + 1 * x2"
    assert r.scheme_eigenvalue(s3, 1, [1, 0], ["1", "2", "3"]) == "3"
    assert r.scheme_eigenvalue(s3, 2, [1, 0], ["1", "2", "3"]) == "6"

    rep = r.verify_scheme(s3, ["1/2", "5/3", "7/4"], D=3, K=2)
    assert all(c["pass"] for c in rep["checks"])


def test_run_suite_and_sampling():
    rep = r.run_suite("hahn-convolution", ["1/2", "3/2"], N=4)
    assert rep["suite"] == "hahn-convolution"
    assert all(c["pass"] for c in rep["checks"])

    # omitted parameters are sampled deterministically from the seed
    rep1 = r.run_suite("racah-convolution", [], N=2, seed=7)
    rep2 = r.run_suite("racah-convolution", [], N=2, seed=7)
    assert rep1 == rep2
    assert all(c["pass"] for c in rep1["checks"])

    p = r.sample_params("racah", 5, 11)
    assert r.check_admissible(p, 5, "racah") == []


def test_exceptions():
    with pytest.raises(r.InadmissibleParametersError):
        r.convolution_matrix("hahn", ["-1", "2"], 3, True)
    with pytest.raises(r.ZeroDenominatorError):
        r.transition_table("racah", ["1/2", "1/2", "5/4"], 3)
