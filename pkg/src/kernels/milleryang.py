"""
The auxiliary integral

    I(x) = (1/2 pi i) int_{(2)} x^(s-1) Gamma(s) zeta(4s-2) / (zeta(2s-1) (s-1)^2) ds

used as an explicit lower bound for the Hecke-side R_1 term. Two routes:
"contour" integrates the line directly, "series" sums the Liouville expansion
I(x) = sum_m lambda(m)/m E1(m^2/x).
"""
import logging
from math import exp, log, sqrt

import numpy as np
from scipy import special

from src.dirichlet.sieve import build_sieve
from src.exceptions import InvalidParameterError, ToleranceError
from src.kernels.contour import DecayCertificate, vertical_line_integral
from src.kernels.zeta import zeta_line

logger = logging.getLogger(__name__)

ZETA3 = 1.2020569031595942
SIGMA = 2.0
DECAY_RATE = 1.4


def integrand(x: float):
    def f(s: complex) -> complex:
        return (
            np.exp((s - 1) * log(x) + special.loggamma(s))
            * zeta_line(4 * s - 2)
            / zeta_line(2 * s - 1)
            / (s - 1) ** 2
        )

    return f


def certificate(x: float) -> DecayCertificate:
    # |Gamma(2+it)|^2 = (1+t^2) pi t / sinh(pi t) and |zeta(6+4it)/zeta(3+2it)| <= zeta(3)
    return DecayCertificate(c=DECAY_RATE, A=3.0 * x * ZETA3)


def _series_terms(x: float, tol: float) -> int:
    M = max(1, int(sqrt(x)))
    while (x / M**3) * (x / (2 * M)) * exp(-(M**2) / x) > tol:
        M *= 2
    return M


def miller_yang_I(x: float, tol: float = 1e-10, method: str = "series", height_factor: float = 1.0) -> float:
    if x <= 0:
        raise InvalidParameterError("I(x) needs x > 0")
    if method == "series":
        M = _series_terms(x, tol)
        sieve = build_sieve(M)
        m = np.arange(1, M + 1)
        terms = sieve.liouville[1:].astype(float) / m * special.exp1(m.astype(float) ** 2 / x)
        return float(np.sum(terms))
    if method != "contour":
        raise InvalidParameterError(f"unknown method {method!r}")
    result = vertical_line_integral(integrand(x), SIGMA, certificate(x), tol, pole=1.0, height_factor=height_factor)
    if abs(result.value.imag) > tol:
        raise ToleranceError(f"I({x}) imaginary residue", achieved_bound=abs(result.value.imag))
    return result.value.real
