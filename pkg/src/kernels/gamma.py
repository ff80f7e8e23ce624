"""
Incomplete-gamma smoothing kernels.

    inc_gamma_ratio(k, x) = Gamma(k, x) / Gamma(k)
    log_kernel(k, x)      = int_x^oo e^-t t^(k-1) log(t/x) dt = int_x^oo Gamma(k, t)/t dt
"""
import logging
from math import factorial

import mpmath
import numpy as np
from scipy import integrate, special

from src.exceptions import InvalidParameterError, ToleranceError

logger = logging.getLogger(__name__)


def inc_gamma_ratio(k: int, x):
    """e^-x sum_{j<k} x^j/j!, exact finite sum for integer k >= 1; accepts arrays."""
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    x = np.asarray(x, dtype=float)
    term = np.ones_like(x)
    total = np.ones_like(x)
    for j in range(1, k):
        term = term * x / j
        total = total + term
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.exp(-x) * total
    out = np.where(np.isfinite(out), out, 0.0)
    return out if out.ndim else float(out)


def log_kernel_ratio(k: int, x):
    """
    log_kernel(k, x) / Gamma(k) = E1(x) + sum_{j=1}^{k-1} Q(j, x)/j, with
    Q the regularized upper incomplete gamma.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise InvalidParameterError("log kernel needs x > 0")
    out = special.exp1(x)
    for j in range(1, k):
        out = out + inc_gamma_ratio(j, x) / j
    return out if np.ndim(out) else float(out)


def log_kernel(k: int, x: float, tol: float = 1e-12, method: str = "closed") -> float:
    """
    G_k(x). ``method="quad"`` integrates Gamma(k, t)/t over [x, oo) adaptively
    and raises ToleranceError when the reported error exceeds ``tol``.
    """
    if x <= 0:
        raise InvalidParameterError("log kernel needs x > 0")
    if method == "closed":
        return factorial(k - 1) * log_kernel_ratio(k, x)
    gk = factorial(k - 1)
    value, err = integrate.quad(lambda t: gk * inc_gamma_ratio(k, t) / t, x, np.inf, epsabs=tol, epsrel=0, limit=400)
    if err > tol:
        raise ToleranceError(f"log_kernel({k}, {x}) quadrature", achieved_bound=err)
    return value


def complex_inc_gamma(s: complex, y: float, tol: float = 1e-12) -> complex:
    """int_y^oo e^-t t^(s-1) dt for Re s > 0."""
    if complex(s).real <= 0:
        raise InvalidParameterError("complex_inc_gamma needs Re s > 0")
    digits = max(15, int(-np.log10(tol)) + 5)
    with mpmath.workdps(digits):
        value = mpmath.gammainc(mpmath.mpc(s), a=y)
    return complex(value)
