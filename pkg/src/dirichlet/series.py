"""
The Dirichlet L-function L_D(s) = sum_{(n,d)=1} (-D/n) n^-s.

Values at s = 1 come from the primitive character mod D through the digamma
function and the first generalized Stieltjes constant, then get the Euler
correction prod_{p|d} (1 - chi(p) p^-s). ``abel_partial_sum`` is the direct
partial-sum route with its Abel-summation error certificate.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import ceil, gcd, log10

import mpmath
import numpy as np
from numpy import finfo
from sympy import factorint

from src.arithmetic.discriminants import kronecker
from src.arithmetic.fields import QuadraticField
from src.character.canonical import validate_twist
from src.exceptions import InvalidParameterError, ToleranceError

logger = logging.getLogger(__name__)

_DPS = 30
_MAX_PARTIAL_TERMS = 50_000_000


@dataclass(frozen=True)
class LValue:
    value: float
    primitive: float
    euler_factor: float
    error_bound: float


@dataclass
class DirichletData:
    """
    n -> kronecker(-D, n) [gcd(n, d) = 1], periodic mod D|d|.
    """

    D: int
    d: int = 1
    _coefficients: np.ndarray = field(default=None, init=False, repr=False)

    def __post_init__(self):
        validate_twist(QuadraticField(self.D), self.d)

    @property
    def period(self) -> int:
        return self.D * abs(self.d)

    @cached_property
    def table(self) -> np.ndarray:
        P = self.period
        return np.array(
            [kronecker(-self.D, a) if gcd(a, self.d) == 1 else 0 for a in range(P)],
            dtype=np.int8,
        )

    @cached_property
    def primitive_table(self) -> np.ndarray:
        return np.array([kronecker(-self.D, a) for a in range(self.D)], dtype=np.int8)

    def chi(self, n):
        n = np.asarray(n, dtype=np.int64)
        out = self.table[n % self.period]
        return out if out.ndim else int(out)

    @cached_property
    def twist_primes(self) -> list:
        return sorted(factorint(abs(self.d)))

    @cached_property
    def max_partial_sum(self) -> int:
        """max |sum_{a <= n} chi(a)| over one period; bounds every interval sum by twice this."""
        return int(np.abs(np.cumsum(self.table.astype(np.int64))).max())

    @cached_property
    def L1(self) -> LValue:
        return L_D_at_1(self.D, self.d)

    @cached_property
    def dL1(self) -> float:
        return L_D_derivative_at_1(self.D, self.d)

    def coefficients(self, N: int) -> np.ndarray:
        if self._coefficients is None or len(self._coefficients) <= N:
            from src.dirichlet.coefficients import an_coefficients

            self._coefficients = an_coefficients(self.D, self.d, N)
        return self._coefficients[: N + 1]


def _euler(D: int, d: int, s):
    """prod_{p|d} (1 - chi(p) p^-s) and its logarithmic derivative."""
    value = mpmath.mpf(1)
    log_derivative = mpmath.mpf(0)
    for p in factorint(abs(d)):
        c = kronecker(-D, p)
        term = 1 - c * mpmath.power(p, -s)
        # mpf cannot be promoted in place to mpc
        value = value * term
        log_derivative = log_derivative + c * mpmath.log(p) * mpmath.power(p, -s) / term
    return value, log_derivative


def _working_dps(tol: float) -> int:
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")
    return max(_DPS, ceil(-log10(tol)) + 10)


def _float_bound(value: float, dps: int, tol: float, what: str) -> float:
    """Error of the float result: working precision plus the final rounding."""
    bound = max(10.0 ** (5 - dps), 4 * finfo(float).eps * abs(value))
    if bound > tol:
        raise ToleranceError(what, achieved_bound=bound)
    return bound


@lru_cache(maxsize=512)
def _primitive_at_1(D: int, dps: int = _DPS):
    with mpmath.workdps(dps):
        L = mpmath.mpf(0)
        S = mpmath.mpf(0)
        for a in range(1, D):
            c = kronecker(-D, a)
            if c:
                L -= c * mpmath.digamma(mpmath.mpf(a) / D)
                S -= c * mpmath.stieltjes(1, mpmath.mpf(a) / D)
        L /= D
        dL = -mpmath.log(D) * L + S / D
        return float(L), float(dL)


def L_D_at_1(D: int, d: int = 1, tol: float = 1e-12) -> LValue:
    """L_D(1) with working precision set from ``tol``; ToleranceError below float resolution."""
    dps = _working_dps(tol)
    validate_twist(QuadraticField(D), d)
    primitive, _ = _primitive_at_1(D, dps)
    with mpmath.workdps(dps):
        euler, _ = _euler(D, d, 1)
    value = primitive * float(euler)
    if value <= 0:
        logger.warning("L_D(1) = %s is not positive for D=%s d=%s", value, D, d)
    bound = _float_bound(value, dps, tol, f"L_D(1) for D={D} d={d}")
    return LValue(value=value, primitive=primitive, euler_factor=float(euler), error_bound=bound)


def L_D_derivative_at_1(D: int, d: int = 1, tol: float = 1e-12) -> float:
    dps = _working_dps(tol)
    validate_twist(QuadraticField(D), d)
    L, dL = _primitive_at_1(D, dps)
    with mpmath.workdps(dps):
        euler, log_derivative = _euler(D, d, 1)
    value = float(dL * euler + L * euler * log_derivative)
    _float_bound(value, dps, tol, f"L_D'(1) for D={D} d={d}")
    return value


def L_D_value(D: int, d: int, s: complex) -> complex:
    """L_D(s) for s != 1 as a Hurwitz-zeta combination over the primitive period."""
    if s == 1:
        return complex(L_D_at_1(D, d).value)
    with mpmath.workdps(_DPS):
        s = mpmath.mpc(s)
        total = mpmath.mpc(0)
        for a in range(1, D):
            c = kronecker(-D, a)
            if c:
                total += c * mpmath.zeta(s, mpmath.mpf(a) / D)
        total *= mpmath.power(D, -s)
        euler, _ = _euler(D, d, s)
        return complex(total * euler)


def abel_partial_sum(D: int, d: int = 1, tol: float = 1e-6, log_weight: bool = False):
    """
    sum_{n <= N} chi(n) f(n) with f(n) = 1/n (or log(n)/n), N picked from the
    bound |tail| <= 2 S f(N+1), S the largest periodic partial sum. Returns
    (value, certified_bound).
    """
    data = DirichletData(D, d)
    S = data.max_partial_sum

    def weight(x):
        return np.log(x) / x if log_weight else 1.0 / x

    N = max(data.period, 8)
    while 2 * S * weight(N + 1.0) > tol:
        N *= 2
        if N > _MAX_PARTIAL_TERMS:
            raise ToleranceError("Abel partial sum", achieved_bound=2 * S * weight(N + 1.0))
    n = np.arange(1, N + 1, dtype=np.int64)
    value = float(np.sum(data.chi(n) * weight(n.astype(float))))
    return value, 2 * S * float(weight(N + 1.0))
