"""
Lambda_k(s) = (D*|d|/2pi)^(s-1) Gamma(s+k-1)/Gamma(k) L_D(2s-1) and its
derivative at s = 1.
"""
from math import log, pi

from scipy import special

from src.arithmetic.fields import QuadraticField
from src.dirichlet.series import L_D_at_1, L_D_derivative_at_1, L_D_value

EULER_GAMMA = 0.57721566490153286061


def digamma_int(k: int) -> float:
    return -EULER_GAMMA + sum(1.0 / j for j in range(1, k))


def conductor_scale(D: int, d: int) -> float:
    """Q = D*|d| / 2pi."""
    return QuadraticField(D).D_star * abs(d) / (2 * pi)


def lambda_k_derivative_at_1(D: int, d: int, k: int, tol: float = 1e-12) -> float:
    L1 = L_D_at_1(D, d, tol).value
    return (digamma_int(k) + log(conductor_scale(D, d))) * L1 + 2 * L_D_derivative_at_1(D, d, tol)


def lambda_k(D: int, d: int, k: int, s: float) -> float:
    Q = conductor_scale(D, d)
    return Q ** (s - 1) * float(special.gamma(s + k - 1) / special.gamma(k)) * L_D_value(D, d, 2 * s - 1).real
