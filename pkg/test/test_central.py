from unittest.mock import patch

import pytest

from src.central.approximations import C_term, I1, I1_contour, I2, R1_liouville_route, Rk, Rk_contour, value_kernel
from src.central.functional_equation import RootNumber, lambda_smoothed, root_number
from src.central.lattice_sums import choose_norm_bound, default_norm_bound, lattice_sum
from src.central.report import central_derivative, central_report, central_value, nonvanishing_threshold, predicted_order
from src.character.canonical import make_character
from src.dirichlet.lambdas import conductor_scale, lambda_k_derivative_at_1
from src.dirichlet.series import L_D_at_1
from src.exceptions import InvalidParameterError, RouteMismatchError
from src.utilities.messages import c_term_normalization_note, derivative_not_meaningful, value_not_meaningful

TOL = 1e-8


@pytest.fixture(scope="module")
def char7():
    return make_character(7, 1, 1)


def test_I1_tiny_conductor_is_small():
    # Q = D*|d|/2pi is about 1.1 for D = 7, so the n = 1 kernel already sits below 1
    term = I1(7, 1, 1, TOL)
    assert 0 < term.value < L_D_at_1(7).value
    assert term.budget.ok


@pytest.mark.slow
@pytest.mark.parametrize("D,d,k", [(7, 1, 1), (8, 1, 1), (11, 5, 2), (7, 5, 1), (8, -3, 2), (11, -4, 1), (11, 8, 2)])
def test_I1_closed_form_matches_contour(D, d, k):
    assert I1(D, d, k, 1e-10).value == pytest.approx(I1_contour(D, d, k, 1e-7), abs=1e-6)


def test_I1_tends_to_L1_for_large_conductor():
    big = I1(163, 1, 1, TOL).value
    assert abs(big - L_D_at_1(163).value) < 0.5


def test_I2_grouped_equals_ungrouped(char7):
    Q = conductor_scale(7, 1)
    X = 400.0
    grouped = lattice_sum(char7, value_kernel(1), Q, X, grouped=True)
    ungrouped = lattice_sum(char7, value_kernel(1), Q, X, grouped=False)
    assert grouped.value == pytest.approx(ungrouped.value, abs=1e-13)
    assert abs(ungrouped.imag) < 1e-12


def test_I2_tail_doubling(char7):
    auto = I2(7, 1, 1, char7, TOL)
    doubled = I2(7, 1, 1, char7, TOL, norm_bound=2 * auto.norm_bound)
    assert abs(auto.value - doubled.value) <= TOL


def test_lattice_sum_independent_of_threads():
    char = make_character(23, 5, 1)
    Q = conductor_scale(23, 5)
    one = lattice_sum(char, value_kernel(1), Q, 3000.0, threads=1)
    four = lattice_sum(char, value_kernel(1), Q, 3000.0, threads=4)
    assert one.value == four.value
    assert one.abs_sum == four.abs_sum


def test_truncation_meets_tolerance():
    trunc = choose_norm_bound(23, 5, value_kernel(1), conductor_scale(23, 5), 1e-10)
    assert trunc.tail_bound <= 1e-10
    assert trunc.norm_bound > 0
    assert default_norm_bound(7, 1) > 4


def test_character_mismatch_rejected(char7):
    with pytest.raises(InvalidParameterError):
        I2(11, 1, 1, char7, TOL)


def test_R1_routes_agree():
    term = Rk(7, 1, 1, 1e-6, cross_check=True)
    assert term.r1_route_gap <= 2e-6
    assert term.r1_lower_bound_holds is None


def test_R1_lower_bound_when_applicable():
    # D*|d|/2pi = 43/2pi > 4
    term = Rk(43, 1, 1, 1e-6, cross_check=True)
    assert term.r1_lower_bound_holds is True
    assert term.value >= 0.0351


def test_R1_route_mismatch_detected():
    with patch("src.central.approximations.R1_liouville_route", return_value=123.0):
        with pytest.raises(RouteMismatchError, match="R1 route mismatch"):
            Rk(7, 1, 1, 1e-6, cross_check=True)


def test_C_term_normalization_note():
    char = make_character(7, 1, 2)
    assert c_term_normalization_note in C_term(7, 1, 2, char, TOL).notes
    assert C_term(7, 1, 1, make_character(7, 1, 1), TOL).notes == []


def test_lambda_smoothed_symmetric_at_one(char7):
    A, B = lambda_smoothed(7, 1, 1, char7, 1.0, TOL)
    assert A == B
    with pytest.raises(InvalidParameterError):
        lambda_smoothed(7, 1, 1, char7, 10.0, TOL)


def test_root_number_D7(char7):
    rn = root_number(7, 1, 1, char7, TOL)
    assert rn.W == 1
    assert abs(abs(rn.W_solved) - 1) <= 1e-4
    assert rn.afe_residual <= 3 * TOL * max(1.0, rn.scale)
    assert root_number(7, 1, 1, char7, TOL / 10).W == rn.W


def test_root_number_is_a_sign():
    for D, d, k in ((8, 1, 1), (11, 5, 1), (23, 1, 1), (19, -4, 2)):
        assert root_number(D, d, k, make_character(D, d, k), TOL).W in (1, -1)


def test_central_value_D7():
    report = central_value(7, 1, 1, tol=TOL)
    assert report.W == 1
    assert report.L_central > 0
    assert report.L_central == pytest.approx(report.afe_value, abs=10 * TOL * max(1.0, report.scale))
    assert report.L_central == pytest.approx(2 * (report.I1 + report.I2))
    assert report.predicted_order == 0
    assert report.L_deriv_central is None


def test_derivative_on_plus_one_case_adds_note():
    report = central_derivative(7, 1, 1, tol=TOL)
    assert derivative_not_meaningful in report.notes
    assert report.L_central is not None


def test_minus_one_route_uses_derivative(char7):
    fake = RootNumber(W=-1, W_solved=-1.0, W_residual=0.0, afe_value=0.0, afe_residual=0.0, scale=1.0, norm_bound=10.0, pairs=())
    with patch("src.central.report.root_number", return_value=fake):
        report = central_report(7, 1, 1, tol=1e-6, char=char7)
    assert report.W == -1
    assert report.L_central is None
    assert report.L_deriv_central == pytest.approx(2 * (report.Rk + report.C))
    assert value_not_meaningful in report.notes
    assert report.r1_route_gap is not None


# (2/D) = -1 for D = 11, 19, so the canonical character has root number -1
@pytest.mark.parametrize("D", [11, 19])
def test_root_number_minus_one(D):
    assert root_number(D, 1, 1, make_character(D, 1, 1), TOL).W == -1


def test_central_derivative_on_minus_one_case():
    report = central_derivative(11, 1, 1, tol=TOL)
    assert report.W == -1
    assert report.L_central is None
    assert report.L_deriv_central == pytest.approx(2 * (report.Rk + report.C))
    assert abs(report.L_deriv_central) > nonvanishing_threshold(TOL, report.scale)
    assert report.predicted_order == 1
    assert report.r1_route_gap <= 2 * TOL
    assert derivative_not_meaningful not in report.notes


def test_value_route_on_minus_one_case_adds_note():
    report = central_value(11, 1, 1, tol=TOL)
    assert value_not_meaningful in report.notes
    assert report.L_central is None
    assert report.predicted_order == 1


@pytest.mark.slow
@pytest.mark.parametrize("D,d,k", [(11, 1, 1), (19, 5, 2), (8, -3, 1)])
def test_Rk_closed_form_matches_contour(D, d, k):
    assert Rk(D, d, k, 1e-10, cross_check=False).value == pytest.approx(Rk_contour(D, d, k, 1e-8), abs=1e-6)


@pytest.mark.slow
@pytest.mark.parametrize("D,d,k", [(11, 1, 1), (23, 5, 1), (19, -4, 2)])
def test_Rk_line_shift_picks_up_lambda_derivative(D, d, k):
    # the double pole at w = 0 contributes Lambda_k'(1) = (psi(k) + log Q) L_D(1) + 2 L_D'(1)
    right = Rk_contour(D, d, k, 1e-8, sigma=1.0)
    left = Rk_contour(D, d, k, 1e-8, sigma=-0.25)
    assert right - left == pytest.approx(lambda_k_derivative_at_1(D, d, k), abs=1e-6)


@pytest.mark.parametrize("W,value,expected", [(1, 0.5, 0), (-1, 0.5, 1), (1, 1e-12, "inconclusive"), (-1, None, "inconclusive")])
def test_predicted_order(W, value, expected):
    assert predicted_order(W, value, 1e-8, 1.0) == expected
