"""
Kernel-weighted sums over principal ideals.

Every principal ideal (alpha) is counted once: rational ideals (n) through the
Dirichlet character, non-rational ones through lattice points (u, v) with
u > 0. For the non-rational part, alpha^(2k-1) N(alpha)^-k is written as
exp(i(2k-1) theta) / sqrt(N) with theta = arg(alpha), and conjugates are paired
so that the grouped sum runs over v > 0 only.

Slices of the v-range are fixed by ``settings.lattice_slice`` and merged with
``math.fsum`` in slice order, so results do not depend on the worker count.
"""
import logging
from dataclasses import dataclass
from math import fsum, log, sqrt
from typing import Callable

import numpy as np
from joblib import Parallel, delayed

from src.arithmetic.lattice import LatticeBlock, lattice_block, v_bound, v_slices
from src.character.canonical import EpsCharacter
from src.config.settings import get_setting
from src.dirichlet.series import DirichletData
from src.exceptions import ToleranceError

logger = logging.getLogger(__name__)
settings = get_setting()

Kernel = Callable[[np.ndarray], np.ndarray]

_MAX_DOUBLINGS = 40
_IMAG_NOISE = 1e-11


@dataclass(frozen=True)
class LatticeSum:
    value: float
    abs_sum: float
    terms: int
    imag: float = 0.0


@dataclass(frozen=True)
class Truncation:
    norm_bound: float
    tail_bound: float


def lattice_count_bound(Y: float, D: int) -> float:
    """Upper bound for #{(u, v) : u^2 + D v^2 <= 4Y}, any signs, rational points included."""
    return (4 * sqrt(Y) + 1) * (4 * sqrt(Y / D) + 1)


def rational_count_bound(Y: float, D: int) -> float:
    return sqrt(Y)


def tail_bound(X: float, kernel: Kernel, Q_eff: float, D: int, count=lattice_count_bound) -> float:
    """
    Bound for sum_{N > X} N^-1/2 kernel(N/Q_eff) over dyadic shells
    (X 2^j, X 2^(j+1)]; kernel must be decreasing.
    """
    total = 0.0
    lo = X
    for _ in range(200):
        term = count(2 * lo, D) * float(kernel(np.array(lo / Q_eff))) / sqrt(lo)
        total += term
        if term < 1e-300 or term < 1e-17 * total:
            break
        lo *= 2
    return total


def default_norm_bound(D: int, d: int) -> float:
    Dd = D * abs(d)
    return max(2.0 * Dd * log(Dd) ** 2, 4.0)


def choose_norm_bound(
    D: int,
    d: int,
    kernel: Kernel,
    Q_eff: float,
    tol: float,
    count=lattice_count_bound,
) -> Truncation:
    """Start from the default cut, double until the tail is below tol, then halve while it stays below."""
    X = default_norm_bound(D, d)
    tail = tail_bound(X, kernel, Q_eff, D, count)
    doublings = 0
    while tail > tol:
        X *= 2
        doublings += 1
        if doublings > _MAX_DOUBLINGS:
            raise ToleranceError(f"lattice truncation for D={D} d={d}", achieved_bound=tail)
        tail = tail_bound(X, kernel, Q_eff, D, count)
    while X > 2:
        smaller = tail_bound(X / 2, kernel, Q_eff, D, count)
        if smaller > tol:
            break
        X, tail = X / 2, smaller
    logger.debug("norm bound D=%s d=%s Q_eff=%.4g -> X=%.4g tail=%.3e", D, d, Q_eff, X, tail)
    return Truncation(norm_bound=X, tail_bound=tail)


def rational_sum(data: DirichletData, kernel: Kernel, Q: float, X: float) -> LatticeSum:
    """sum_{n^2 <= X} chi_D(n)/n kernel(n^2/Q)."""
    n = np.arange(1, int(sqrt(X)) + 1, dtype=np.int64)
    if n.size == 0:
        return LatticeSum(0.0, 0.0, 0)
    nf = n.astype(float)
    terms = data.chi(n) / nf * kernel(nf * nf / Q)
    return LatticeSum(fsum(terms), fsum(np.abs(terms)), int(np.count_nonzero(terms)))


def block_terms(char: EpsCharacter, kernel: Kernel, Q: float, block: LatticeBlock, grouped: bool = True):
    """
    Per-point (real, imaginary) contributions of a block. Grouped terms stand
    for the pair (u, v), (u, -v) and are real.
    """
    eps = char.eps_values(block.u, block.v, block.n4)
    N = block.n4 / 4.0
    theta = np.arctan2(block.v * sqrt(char.field.D), block.u.astype(float))
    weight = eps * kernel(N / Q) / np.sqrt(N)
    phase = (2 * char.k - 1) * theta
    if grouped:
        return 2.0 * weight * np.cos(phase), np.zeros_like(weight), eps
    return weight * np.cos(phase), weight * np.sin(phase), eps


def _slice_sum(char: EpsCharacter, kernel: Kernel, Q: float, X: float, v_lo: int, v_hi: int, grouped: bool):
    block = lattice_block(char.field, X, v_lo, v_hi)
    if len(block) == 0:
        return 0.0, 0.0, 0.0, 0
    re, im, eps = block_terms(char, kernel, Q, block, grouped)
    return fsum(re), fsum(np.abs(re)), fsum(im), int(np.count_nonzero(eps))


def lattice_sum(
    char: EpsCharacter,
    kernel: Kernel,
    Q: float,
    X: float,
    threads: int = 1,
    grouped: bool = True,
) -> LatticeSum:
    """
    sum over non-rational principal ideals of chi((alpha)) N^-k kernel(N/Q), N <= X.

    With ``grouped=False`` both signs of v are enumerated and the imaginary part
    is returned for inspection; it must vanish up to rounding.
    """
    V = v_bound(char.field.D, X)
    slices = list(v_slices(V, settings.lattice_slice, positive_only=grouped))
    if threads > 1 and len(slices) > 1:
        parts = Parallel(n_jobs=threads, prefer="threads")(
            delayed(_slice_sum)(char, kernel, Q, X, lo, hi, grouped) for lo, hi in slices
        )
    else:
        parts = [_slice_sum(char, kernel, Q, X, lo, hi, grouped) for lo, hi in slices]
    value = fsum(p[0] for p in parts)
    abs_sum = fsum(p[1] for p in parts)
    imag = fsum(p[2] for p in parts)
    if abs(imag) > _IMAG_NOISE * max(1.0, abs_sum):
        raise ToleranceError(f"imaginary residue of lattice sum for D={char.field.D}", achieved_bound=abs(imag))
    return LatticeSum(value, abs_sum, sum(p[3] for p in parts), imag)
