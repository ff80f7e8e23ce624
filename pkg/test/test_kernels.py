from math import exp, gamma

import mpmath
import numpy as np
import pytest
from scipy import special

from src.exceptions import InvalidParameterError, ToleranceError
from src.kernels.contour import DecayCertificate, gamma_decay_certificate, vertical_line_integral
from src.kernels.gamma import complex_inc_gamma, inc_gamma_ratio, log_kernel, log_kernel_ratio
from src.kernels.milleryang import miller_yang_I
from src.kernels.zeta import ZETA_FLOOR, _check_floor, zeta_line


@pytest.mark.parametrize("k", [1, 2, 3, 5])
@pytest.mark.parametrize("x", [0.01, 0.5, 1.0, 7.5, 40.0])
def test_inc_gamma_ratio_matches_scipy(k, x):
    assert inc_gamma_ratio(k, x) == pytest.approx(special.gammaincc(k, x), rel=1e-12, abs=1e-300)


def test_inc_gamma_ratio_vectorized_and_limits():
    x = np.array([0.0, 1.0, 1e4])
    out = inc_gamma_ratio(3, x)
    assert out[0] == 1.0
    assert out[2] == 0.0
    assert inc_gamma_ratio(1, 2.0) == pytest.approx(exp(-2.0))
    with pytest.raises(InvalidParameterError):
        inc_gamma_ratio(0, 1.0)


def test_log_kernel_k1_is_exp1():
    for x in (0.1, 1.0, 3.0):
        assert log_kernel(1, x) == pytest.approx(special.exp1(x), rel=1e-13)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("x", [0.2, 1.0, 4.0])
def test_log_kernel_closed_form_matches_quadrature(k, x):
    assert log_kernel(k, x) == pytest.approx(log_kernel(k, x, tol=1e-9, method="quad"), abs=1e-8)
    assert log_kernel_ratio(k, x) == pytest.approx(log_kernel(k, x) / gamma(k), rel=1e-13)


def test_log_kernel_rejects_nonpositive():
    with pytest.raises(InvalidParameterError):
        log_kernel(1, 0.0)


def test_complex_inc_gamma_real_axis():
    for s in (0.5, 1.0, 2.5):
        expected = gamma(s) * special.gammaincc(s, 1.3)
        assert complex_inc_gamma(s, 1.3) == pytest.approx(expected, rel=1e-12)
    value = complex_inc_gamma(2 + 3j, 0.7)
    assert value == pytest.approx(complex(mpmath.gammainc(2 + 3j, a=0.7)), rel=1e-12)
    with pytest.raises(InvalidParameterError):
        complex_inc_gamma(-1 + 1j, 1.0)


@pytest.mark.parametrize("s", [2.5, 3.0, 6.0, 2.5 + 10j, 6 + 4j, 3 - 40j])
def test_zeta_line_matches_mpmath(s):
    assert zeta_line(s) == pytest.approx(complex(mpmath.zeta(s)), abs=1e-12)


def test_zeta_line_domain():
    with pytest.raises(InvalidParameterError):
        zeta_line(2.0)


@pytest.mark.parametrize("t", [0.0, 1.0, 5.0, 20.0, 60.0])
def test_zeta_line_stays_away_from_zero(t):
    assert abs(zeta_line(complex(2.5, t))) >= ZETA_FLOOR


def test_zeta_floor_violation_raises():
    with pytest.raises(ToleranceError):
        _check_floor(3 + 1j, 0.1 + 0.2j)
    assert _check_floor(3.0, 1.2) == 1.2


def test_vertical_line_integral_cahen_mellin():
    # (1/2 pi i) int_{(1)} Gamma(s) y^-s ds = exp(-y)
    y = 1.0
    certificate = gamma_decay_certificate(1.0, c=1.0, scale=1 / y)
    result = vertical_line_integral(lambda s: complex(special.gamma(s)) * y ** (-s), 1.0, certificate, 1e-8, pole=0.0)
    assert result.value.real == pytest.approx(exp(-y), abs=1e-7)
    assert abs(result.value.imag) < 1e-7
    assert result.budget.ok


def test_vertical_line_integral_linearity():
    certificate = gamma_decay_certificate(2.0, c=1.0, scale=2.0)
    f = lambda s: complex(special.gamma(s))
    single = vertical_line_integral(f, 2.0, certificate, 1e-8, pole=0.0).value
    double = vertical_line_integral(lambda s: 2 * f(s), 2.0, certificate, 1e-8, pole=0.0).value
    assert double == pytest.approx(2 * single, abs=1e-7)


def test_vertical_line_integral_requires_certificate():
    with pytest.raises(InvalidParameterError):
        vertical_line_integral(lambda s: 1 / s**2, 2.0, None, 1e-8)
    with pytest.raises(InvalidParameterError):
        vertical_line_integral(lambda s: 1 / s**2, 2.0, DecayCertificate(c=1.0, A=1e-12), 1e-8)
    with pytest.raises(InvalidParameterError):
        vertical_line_integral(lambda s: 1 / s**2, 0.5, DecayCertificate(c=1.0, A=1.0), 1e-8, pole=1.0)


def test_miller_yang_constant():
    assert miller_yang_I(4.0, 1e-8) > 0.0351


@pytest.mark.parametrize("x", [0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0])
def test_miller_yang_positive_on_grid(x):
    assert miller_yang_I(x, 1e-8) > 0


def test_miller_yang_small_x_is_exp1_dominated():
    # only m = 1 survives when x is tiny
    assert miller_yang_I(0.1, 1e-14) == pytest.approx(special.exp1(10.0), rel=1e-8)


@pytest.mark.slow
@pytest.mark.parametrize("x", [1.0, 4.0, 16.0])
def test_miller_yang_methods_agree(x):
    series = miller_yang_I(x, 1e-9, method="series")
    contour = miller_yang_I(x, 1e-8, method="contour")
    assert series == pytest.approx(contour, abs=1e-7)


def test_miller_yang_unknown_method():
    with pytest.raises(InvalidParameterError):
        miller_yang_I(4.0, method="magic")
