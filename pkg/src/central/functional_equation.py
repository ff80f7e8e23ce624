"""
Smoothed functional equation for L(s, chi, p) at s = k.

With Q = D*|d|/2pi and real coefficients c over all principal ideals,

    A(x) = sum c N^-k Q(k, N/(Q x)),    B(x) = A(1/x),

and L(k, chi, p) = A(x) + W B(x) for every x > 0. The root number W comes from
solving this at two split points and is checked at a third.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.character.canonical import EpsCharacter
from src.config.settings import get_setting
from src.dirichlet.lambdas import conductor_scale
from src.dirichlet.series import DirichletData
from src.exceptions import FunctionalEquationError, IndeterminateRootNumberError, InvalidParameterError
from src.central.approximations import _check_char, value_kernel
from src.central.lattice_sums import choose_norm_bound, lattice_count_bound, lattice_sum, rational_sum

logger = logging.getLogger(__name__)
settings = get_setting()


@dataclass(frozen=True)
class SmoothedPair:
    x: float
    A: float
    B: float
    scale: float
    norm_bound: float


@dataclass(frozen=True)
class RootNumber:
    W: int
    W_solved: float
    W_residual: float
    afe_value: float
    afe_residual: float
    scale: float
    norm_bound: float
    pairs: Tuple[SmoothedPair, ...]


def _smoothed_sum(char: EpsCharacter, data: DirichletData, Q: float, X: float, threads: int):
    kernel = value_kernel(char.k)
    r = rational_sum(data, kernel, Q, X)
    s = lattice_sum(char, kernel, Q, X, threads)
    return r.value + s.value, r.abs_sum + s.abs_sum


def smoothed_pair(char: EpsCharacter, x: float, tol: float, threads: int = 1) -> SmoothedPair:
    D, d = char.field.D, char.d
    data = DirichletData(D, d)
    Q = conductor_scale(D, d)
    trunc = choose_norm_bound(D, d, value_kernel(char.k), Q * max(x, 1 / x), tol / 4, lattice_count_bound)
    A, scale_a = _smoothed_sum(char, data, Q * x, trunc.norm_bound, threads)
    B, scale_b = _smoothed_sum(char, data, Q / x, trunc.norm_bound, threads)
    return SmoothedPair(x=x, A=A, B=B, scale=max(scale_a, scale_b), norm_bound=trunc.norm_bound)


def lambda_smoothed(D: int, d: int, k: int, char: EpsCharacter, x: float, tol: float, threads: int = 1) -> Tuple[float, float]:
    """(A(x), B(x)), normalized so that A(x) + W B(x) = L(k, chi, p)."""
    if not 1 / 8 <= x <= 8:
        raise InvalidParameterError(f"split point x={x} outside [1/8, 8]")
    _check_char(D, d, k, char)
    pair = smoothed_pair(char, x, tol, threads)
    return pair.A, pair.B


def root_number(D: int, d: int, k: int, char: EpsCharacter, tol: float, threads: int = 1) -> RootNumber:
    _check_char(D, d, k, char)
    x1, x2 = settings.afe_split_points
    x3 = settings.afe_check_point
    p1, p2, p3 = (smoothed_pair(char, x, tol, threads) for x in (x1, x2, x3))
    scale = max(p.scale for p in (p1, p2, p3))

    gap = abs(p1.B - p2.B)
    if gap <= 10 * tol:
        logger.warning("root number system ill-conditioned for D=%s d=%s k=%s: |B1-B2|=%.3e", D, d, k, gap)
        raise IndeterminateRootNumberError("indeterminate W: raise precision", witness={"B_gap": gap})

    matrix = np.array([[1.0, -p1.B], [1.0, -p2.B]])
    L, W_solved = np.linalg.solve(matrix, np.array([p1.A, p2.A]))
    if abs(abs(W_solved) - 1) > settings.root_number_slack:
        logger.error("functional equation violated D=%s d=%s k=%s: W_solved=%s", D, d, k, W_solved)
        raise FunctionalEquationError("functional equation violated", witness={"W_solved": float(W_solved)})
    W = 1 if W_solved > 0 else -1

    afe_value = p1.A + W * p1.B
    afe_residual = max(abs(p.A + W * p.B - afe_value) for p in (p2, p3))
    if afe_residual > 3 * tol * max(1.0, scale):
        raise FunctionalEquationError(
            "functional equation violated",
            witness={"W": W, "afe_residual": afe_residual, "x": [x1, x2, x3]},
        )
    logger.info("D=%s d=%s k=%s variant=%s: W=%+d (solved %.8f)", D, d, k, char.variant_index, W, W_solved)
    return RootNumber(
        W=W,
        W_solved=float(W_solved),
        W_residual=float(abs(W_solved - W)),
        afe_value=float(afe_value),
        afe_residual=float(afe_residual),
        scale=scale,
        norm_bound=max(p.norm_bound for p in (p1, p2, p3)),
        pairs=(p1, p2, p3),
    )
