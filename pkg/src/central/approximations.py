"""
Term-wise closed forms of the central decompositions

    L(k, chi, p)/2  = I1 + I2
    L'(k, chi, p)/2 = Rk + C

I1 and Rk run over rational ideals (n), I2 and C over non-rational principal
ideals. Kernels are Q(k, N/Q) = Gamma(k, N/Q)/Gamma(k) for the value and
G_k(N/Q)/Gamma(k) for the derivative, with Q = D*|d|/2pi.
"""
import logging
from dataclasses import dataclass, field
from functools import partial
from math import fsum, sqrt
from typing import List, Optional

import numpy as np
from scipy import special

from src.api_models.reports import AccuracyBudget
from src.character.canonical import EpsCharacter
from src.config.settings import get_setting
from src.dirichlet.lambdas import conductor_scale
from src.dirichlet.series import DirichletData, L_D_value
from src.exceptions import InvalidParameterError, RouteMismatchError
from src.kernels.contour import gamma_decay_certificate, vertical_line_integral
from src.kernels.gamma import inc_gamma_ratio, log_kernel_ratio
from src.kernels.milleryang import miller_yang_I
from src.utilities.messages import c_term_normalization_note
from src.central.lattice_sums import (
    choose_norm_bound,
    lattice_count_bound,
    lattice_sum,
    rational_count_bound,
    rational_sum,
)

logger = logging.getLogger(__name__)
settings = get_setting()

MILLER_YANG_CONSTANT = 0.0351


@dataclass
class Term:
    value: float
    budget: AccuracyBudget
    scale: float
    norm_bound: float
    notes: List[str] = field(default_factory=list)
    r1_route_gap: Optional[float] = None
    r1_lower_bound_holds: Optional[bool] = None


def value_kernel(k: int):
    return partial(inc_gamma_ratio, k)


def derivative_kernel(k: int):
    return partial(log_kernel_ratio, k)


def _check_char(D: int, d: int, k: int, char: EpsCharacter) -> None:
    if (char.field.D, char.d, char.k) != (D, d, k):
        raise InvalidParameterError(
            f"character for (D, d, k) = {(char.field.D, char.d, char.k)} does not match {(D, d, k)}"
        )


def _rational_term(D: int, d: int, kernel, tol: float) -> Term:
    data = DirichletData(D, d)
    Q = conductor_scale(D, d)
    trunc = choose_norm_bound(D, d, kernel, Q, tol, count=rational_count_bound)
    s = rational_sum(data, kernel, Q, trunc.norm_bound)
    bound = trunc.tail_bound + 1e-16 * s.abs_sum
    return Term(s.value, AccuracyBudget(abs_tol=tol, achieved_bound=bound), s.abs_sum, trunc.norm_bound)


def _lattice_term(D: int, d: int, char: EpsCharacter, kernel, tol: float, threads: int, norm_bound: Optional[float] = None) -> Term:
    Q = conductor_scale(D, d)
    if norm_bound is None:
        trunc = choose_norm_bound(D, d, kernel, Q, tol, count=lattice_count_bound)
        norm_bound, tail = trunc.norm_bound, trunc.tail_bound
    else:
        tail = 0.0
    s = lattice_sum(char, kernel, Q, norm_bound, threads)
    bound = tail + 1e-16 * s.abs_sum
    return Term(s.value, AccuracyBudget(abs_tol=tol, achieved_bound=bound), s.abs_sum, norm_bound)


def I1(D: int, d: int, k: int, tol: float) -> Term:
    """sum_{(n,d)=1} (-D/n)/n Q(k, 2 pi n^2/(D*|d|))."""
    return _rational_term(D, d, value_kernel(k), tol)


def I2(D: int, d: int, k: int, char: EpsCharacter, tol: float, threads: int = 1, norm_bound: Optional[float] = None) -> Term:
    _check_char(D, d, k, char)
    return _lattice_term(D, d, char, value_kernel(k), tol, threads, norm_bound)


def C_term(D: int, d: int, k: int, char: EpsCharacter, tol: float, threads: int = 1, norm_bound: Optional[float] = None) -> Term:
    _check_char(D, d, k, char)
    term = _lattice_term(D, d, char, derivative_kernel(k), tol, threads, norm_bound)
    if k > 1:
        term.notes.append(c_term_normalization_note)
    return term


def R1_liouville_route(D: int, d: int, tol: float, method: Optional[str] = None) -> float:
    """sum_n a_n/n I(Q/n^2)."""
    method = method or settings.miller_yang_method
    Q = conductor_scale(D, d)
    M = int(sqrt(Q)) + 1
    while True:
        n = np.arange(M + 1, 8 * M + 1, dtype=float)
        tail = 4.0 * fsum(special.exp1(n * n / Q) / np.sqrt(n))
        if tail <= tol / 2:
            break
        M *= 2
    a = DirichletData(D, d).coefficients(M)
    per_term = tol / (4 * M)
    terms = [a[n] / n * miller_yang_I(Q / n**2, per_term, method) for n in range(1, M + 1) if a[n]]
    return fsum(terms)


def Rk(D: int, d: int, k: int, tol: float, cross_check: Optional[bool] = None) -> Term:
    """
    sum_{(n,d)=1} (-D/n)/n G_k(2 pi n^2/(D*|d|))/Gamma(k); for k = 1 also
    evaluated through the a_n expansion and compared.
    """
    term = _rational_term(D, d, derivative_kernel(k), tol)
    cross_check = settings.r1_cross_check if cross_check is None else cross_check
    if k == 1 and cross_check:
        other = R1_liouville_route(D, d, tol)
        gap = abs(other - term.value)
        term.r1_route_gap = gap
        if gap > 2 * tol:
            logger.error("R1 route mismatch D=%s d=%s: %s vs %s", D, d, term.value, other)
            raise RouteMismatchError(
                "R1 route mismatch", witness={"G_route": term.value, "I_route": other, "gap": gap}
            )
        Q = conductor_scale(D, d)
        if Q >= 4:
            term.r1_lower_bound_holds = term.value >= MILLER_YANG_CONSTANT
        else:
            logger.info("R1 lower bound not applicable: D*|d|/2pi = %.4f < 4", Q)
    return term


def _rational_line(D: int, d: int, k: int, tol: float, sigma: float, pole_order: int) -> float:
    """(1/2 pi i) int_{(sigma)} Q^w Gamma(w+k)/Gamma(k) L_D(1+2w) dw/w^pole_order."""
    if sigma == 0 or sigma <= -k:
        raise InvalidParameterError(f"line Re w = {sigma} must avoid the poles at 0 and -k")
    Q = conductor_scale(D, d)
    gk = special.gamma(k)

    def f(w: complex) -> complex:
        return Q**w * complex(special.gamma(w + k)) / gk * L_D_value(D, d, 1 + 2 * w) / w**pole_order

    if sigma > 0:
        L_bound = float(special.zeta(1 + 2 * sigma)) ** 2
    else:
        # convexity-type bound left of Re s = 1, with room for the sampled check
        L_bound = sqrt(D * abs(d)) * (1 - 2 * sigma) + 10
    scale = Q**sigma * L_bound / (gk * abs(sigma) ** pole_order)
    certificate = gamma_decay_certificate(sigma + k, c=1.0, scale=scale)
    result = vertical_line_integral(f, sigma, certificate, tol, pole=0.0 if sigma > 0 else None)
    return result.value.real


def I1_contour(D: int, d: int, k: int, tol: float) -> float:
    """I1 from its defining line integral on Re w = 1, simple pole at w = 0."""
    return _rational_line(D, d, k, tol, 1.0, 1)


def Rk_contour(D: int, d: int, k: int, tol: float, sigma: float = 1.0) -> float:
    """
    Rk from (1/2 pi i) int Q^w Gamma(w+k)/Gamma(k) L_D(1+2w) dw/w^2. Moving the
    line from Re w > 0 to -k < Re w < 0 crosses the double pole at w = 0 whose
    residue is Lambda_k'(1).
    """
    return _rational_line(D, d, k, tol, sigma, 2)
