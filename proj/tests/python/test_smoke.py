import json
from fractions import Fraction as F

import pytest

import spinproj


def test_spin_range_and_alpha():
    assert spinproj.spin_range(3) == [F(3, 2), F(1, 2), F(-1, 2), F(-3, 2)]
    assert spinproj.spin_range(0) == [0]
    assert spinproj.alpha(1) == 1
    assert spinproj.alpha(2) == 0
    assert spinproj.factorial(20) == 2432902008176640000


def test_projectors_match_worked_examples():
    assert spinproj.projector_polynomial(1, 1) == [F(1, 2), 1]
    assert spinproj.projector_polynomial(2, 0) == [1, 0, -1]
    assert spinproj.projector_polynomial(2, 2) == [0, F(1, 2), F(1, 2)]
    assert spinproj.projector_coefficient(3, 3) == F(1, 6)
    assert spinproj.projector_latex(2, 2) == r"\frac{1}{2}\,\hat S_z(\hat S_z + 1)"


def test_projector_kronecker_property():
    for two_s in range(0, 9):
        spectrum = spinproj.spin_range(two_s)
        for i, m in enumerate(spectrum):
            p = spinproj.projector_polynomial(two_s, int(2 * m))
            assert [spinproj.poly_eval(p, x) for x in spectrum] == [1 if j == i else 0 for j in range(len(spectrum))]


def test_interpolation_and_reduction():
    assert spinproj.interpolate([F(1, 2), F(-1, 2)], [1, 0]) == [F(1, 2), 1]
    assert spinproj.interpolate(["3/2", "1/2", "-1/2", "-3/2"], [F(9, 4), F(1, 4), F(1, 4), F(9, 4)]) == [0, 0, 1]
    assert spinproj.node_polynomial([1, 0, -1]) == [0, -1, 0, 1]
    assert spinproj.lagrange_basis([1, 0, -1], 1) == [1, 0, -1]
    q, r = spinproj.poly_divmod([0, 0, 0, 0, 0, 1], [0, -1, 0, 1])
    assert (q, r) == ([1, 0, 1], [0, 1])
    assert spinproj.reduce_power(3, 4) == [F(-9, 16), 0, F(5, 2)]
    assert spinproj.operator_function(2, [1, 0, -1]) == [0, 1]


def test_operator_evaluation():
    sz = spinproj.sz_operator(2)
    assert sz == [1, 0, -1]
    assert spinproj.eval_on_diagonal([1, 0, -1], 2, sz) == [0, 1, 0]
    assert spinproj.eval_on_matrix([0, 1], [[1, 2], [3, 4]]) == [[1, 2], [3, 4]]


def test_suite_and_report_json():
    report = spinproj.run_suite(10)
    assert report["twoS"] == 10
    assert [c["name"] for c in report["checks"]] == [
        "annihilator", "idempotency", "orthogonality", "completeness", "kronecker", "degree"]
    assert all(c["pass"] and c["witness"] is None for c in report["checks"])
    assert json.loads(spinproj.report_json(1)) == spinproj.run_suite(1)


def test_errors():
    with pytest.raises(ValueError):
        spinproj.projector_polynomial(2, 1)
    with pytest.raises(ValueError):
        spinproj.interpolate([1, 1], [0, 1])
    with pytest.raises(spinproj.DivisionByZero):
        spinproj.poly_divmod([1], [])
    with pytest.raises(ZeroDivisionError):
        spinproj.poly_divmod([1], [])
