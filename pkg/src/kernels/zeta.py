"""
Riemann zeta on Re s >= 2.5 by Euler-Maclaurin summation with an explicit
remainder bound.
"""
import logging
from functools import lru_cache

import numpy as np
from scipy import special

from src.exceptions import InvalidParameterError, ToleranceError

logger = logging.getLogger(__name__)

_ORDER = 8
_MAX_N = 1 << 16
ZETA_FLOOR = 0.5


@lru_cache(maxsize=1)
def _bernoulli_coefficients():
    b = special.bernoulli(2 * _ORDER + 2)
    return [b[2 * j] / special.factorial(2 * j, exact=True) for j in range(1, _ORDER + 2)]


def _rising(s: complex, m: int) -> complex:
    out = 1.0 + 0j
    for i in range(m):
        out *= s + i
    return out


def _check_floor(s: complex, value: complex) -> complex:
    # on Re s >= 2.5, |zeta(s)| >= zeta(5)/zeta(2.5) > 0.77
    if abs(value) < ZETA_FLOOR:
        raise ToleranceError(f"|zeta({s})| = {abs(value):.3e} below {ZETA_FLOOR}", achieved_bound=abs(value))
    return value


def zeta_line(s: complex, tol: float = 1e-13) -> complex:
    s = complex(s)
    if s.real < 2.5:
        raise InvalidParameterError(f"zeta_line only covers Re s >= 2.5, got {s}")
    coeffs = _bernoulli_coefficients()
    N = max(10, int(abs(s.imag) / 4) + 10)
    while True:
        n = np.arange(1, N, dtype=float)
        head = np.sum(np.exp(-s * np.log(n)))
        tail = N ** (1 - s) / (s - 1) + 0.5 * N ** (-s)
        for j in range(1, _ORDER + 1):
            tail += coeffs[j - 1] * _rising(s, 2 * j - 1) * N ** (-s - 2 * j + 1)
        p = _ORDER
        remainder = abs(coeffs[p] * _rising(s, 2 * p + 1) * N ** (-s - 2 * p - 1)) * abs(s + 2 * p + 1) / (s.real + 2 * p + 1)
        if remainder <= tol:
            return _check_floor(s, complex(head + tail))
        if N >= _MAX_N:
            raise ToleranceError(f"zeta_line({s})", achieved_bound=remainder)
        N *= 2
