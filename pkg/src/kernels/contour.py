"""
Numerical integration of (1/2 pi i) int_{(sigma)} f(s) ds along a vertical line.

The caller supplies a decay certificate |f(sigma + it)| <= A exp(-c|t|); the
line is truncated at |t| = T with the certificate tail below tol/2 and the
remaining segment integrated adaptively.
"""
import logging
from dataclasses import dataclass
from math import log, pi
from typing import Callable, Optional

import numpy as np
from scipy import integrate, special

from src.api_models.reports import AccuracyBudget
from src.exceptions import InvalidParameterError, ToleranceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecayCertificate:
    c: float
    A: float

    def bound(self, t) -> float:
        return self.A * np.exp(-self.c * np.abs(t))

    def truncation_height(self, tol: float) -> float:
        return max(log(2 * self.A / (pi * self.c * tol)) / self.c, 1.0)


@dataclass(frozen=True)
class LineIntegral:
    value: complex
    budget: AccuracyBudget


def gamma_decay_certificate(sigma: float, c: float = 1.0, scale: float = 1.0, t_max: float = 400.0) -> DecayCertificate:
    """Certificate for scale * Gamma(sigma + it), sampled with a 25% margin; needs c < pi/2."""
    if not 0 < c < pi / 2:
        raise InvalidParameterError("gamma decay rate must lie in (0, pi/2)")
    t = np.linspace(0.0, t_max, 8001)
    logs = special.loggamma(sigma + 1j * t).real + c * t
    return DecayCertificate(c=c, A=1.25 * scale * float(np.exp(logs.max())))


def _check_certificate(f, sigma, certificate, T):
    for t in np.concatenate([np.linspace(0.25 * T, 2 * T, 8), -np.linspace(0.25 * T, 2 * T, 8)]):
        observed = abs(f(complex(sigma, t)))
        if observed > certificate.bound(t) * (1 + 1e-9):
            raise InvalidParameterError(
                f"decay certificate violated at t={t:.3f}: |f|={observed:.3e} > {certificate.bound(t):.3e}"
            )


def vertical_line_integral(
    f: Callable[[complex], complex],
    sigma: float,
    certificate: Optional[DecayCertificate],
    tol: float,
    pole: Optional[float] = None,
    height_factor: float = 1.0,
) -> LineIntegral:
    if certificate is None:
        raise InvalidParameterError("vertical_line_integral needs a decay certificate")
    if pole is not None and sigma <= pole:
        raise InvalidParameterError(f"integration line sigma={sigma} must lie right of the pole at {pole}")
    T = certificate.truncation_height(tol) * height_factor
    _check_certificate(f, sigma, certificate, T)
    tail = 2 * certificate.A * np.exp(-certificate.c * T) / (2 * pi * certificate.c)

    part_tol = tol * pi / 2
    re, re_err = integrate.quad(lambda t: f(complex(sigma, t)).real, -T, T, epsabs=part_tol, epsrel=0, limit=1000)
    im, im_err = integrate.quad(lambda t: f(complex(sigma, t)).imag, -T, T, epsabs=part_tol, epsrel=0, limit=1000)
    quad_err = (re_err + im_err) / (2 * pi)
    budget = AccuracyBudget(abs_tol=tol, achieved_bound=quad_err + tail, truncation_height=T)
    logger.debug("line integral sigma=%s T=%.3f tail=%.3e quad=%.3e", sigma, T, tail, quad_err)
    if not budget.ok:
        raise ToleranceError("vertical line integral", achieved_bound=budget.achieved_bound)
    return LineIntegral(value=complex(re, im) / (2 * pi), budget=budget)
