"""
Coefficients a_n of zeta(s) L_D(s) / zeta(2s).

Local factor at p is (1 + p^-s) / (1 - chi(p) p^-s):
    chi(p) = 1   ->  a_{p^j} = 2 for j >= 1
    chi(p) = -1  ->  a_{p^j} = 0 for j >= 1
    chi(p) = 0   ->  a_p = 1, a_{p^j} = 0 for j >= 2
"""
import logging

import numpy as np
from sympy import mobius

from src.dirichlet.sieve import build_sieve
from src.exceptions import CoefficientSanityError, InvalidParameterError

logger = logging.getLogger(__name__)


def _local(c: int, j: int) -> int:
    if c == 1:
        return 2
    if c == -1:
        return 0
    return 1 if j == 1 else 0


def an_coefficients(D: int, d: int, N: int) -> np.ndarray:
    """Array a with a[n] = a_n for 1 <= n <= N (a[0] = 0)."""
    from src.dirichlet.series import DirichletData

    if N < 1:
        raise InvalidParameterError(f"N must be >= 1, got {N}")
    data = DirichletData(D, d)
    sieve = build_sieve(N)
    spf = sieve.spf
    exponent = np.zeros(N + 1, dtype=np.int64)
    cofactor = np.ones(N + 1, dtype=np.int64)
    a = np.zeros(N + 1, dtype=np.int64)
    if N >= 1:
        a[1] = 1
    for n in range(2, N + 1):
        p = int(spf[n])
        m = n // p
        if m > 1 and spf[m] == p:
            exponent[n] = exponent[m] + 1
            cofactor[n] = cofactor[m]
        else:
            exponent[n] = 1
            cofactor[n] = m
        a[n] = a[cofactor[n]] * _local(int(data.chi(p)), int(exponent[n]))
    check_nonnegative(a)
    return a


def check_nonnegative(a: np.ndarray) -> None:
    negative = np.flatnonzero(a[1:] < 0)
    if negative.size or (a.size > 1 and a[1] != 1):
        n = int(negative[0]) + 1 if negative.size else 1
        logger.error("coefficient sanity violated at n=%s (a_n=%s)", n, a[n])
        raise CoefficientSanityError("coefficient sanity violated", witness={"n": n, "a_n": int(a[n])})


def convolution_coefficients(D: int, d: int, N: int) -> np.ndarray:
    """Direct Dirichlet convolution 1 * chi * g with g(m^2) = mu(m), g = 0 off squares."""
    from src.dirichlet.series import DirichletData

    data = DirichletData(D, d)
    chi = data.chi(np.arange(N + 1))
    h = np.zeros(N + 1, dtype=np.int64)
    for e in range(1, N + 1):
        if chi[e]:
            h[e::e] += chi[e]
    a = np.zeros(N + 1, dtype=np.int64)
    m = 1
    while m * m <= N:
        mu = int(mobius(m))
        if mu:
            sq = m * m
            a[sq::sq] += mu * h[1 : N // sq + 1]
        m += 1
    return a


def liouville(N: int) -> np.ndarray:
    return build_sieve(N).liouville[: N + 1]
