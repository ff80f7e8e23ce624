"""
Character sums S_v(w) = sum_{M <= u < w, 4 | u^2 + D v^2} eps((u + v sqrt(-D))/2)
and the exact identities behind their estimation.
"""
import logging
from math import fsum, log2, sqrt
from typing import Optional

import numpy as np

from src.api_models.reports import CharSumRecord, DyadicReport, ReductionCheck
from src.arithmetic.lattice import lattice_block, v_bound
from src.character.canonical import EpsCharacter
from src.character.factorization import EpsFactorization, factor_eps
from src.dirichlet.lambdas import conductor_scale
from src.exceptions import InvalidParameterError
from src.central.approximations import derivative_kernel, value_kernel
from src.central.lattice_sums import block_terms, default_norm_bound

logger = logging.getLogger(__name__)

BURGESS_EXPONENT = 3 / 16


def _admissible_u(D: int, v: int, M: int, w: int) -> np.ndarray:
    u = np.arange(M, w, dtype=np.int64)
    return u[(u * u + D * v * v) % 4 == 0]


def bound_ratio(value: float, D: int, d: int, M: int) -> float:
    return abs(value) / (abs(d) + sqrt(M) * D**BURGESS_EXPONENT * sqrt(abs(d)))


def char_sum(D: int, d: int, char: EpsCharacter, v: int, M: int, w: int) -> CharSumRecord:
    if not 0 < M <= w:
        raise InvalidParameterError(f"need 0 < M <= w, got M={M} w={w}")
    u = _admissible_u(D, v, M, w)
    value = int(char.eps_values(u, np.full(u.size, v, dtype=np.int64)).sum()) if u.size else 0
    return CharSumRecord(
        D=D, d=d, v=v, M=M, w=w, sum_value=value, n_terms=int(u.size), bound_ratio=bound_ratio(value, D, d, M)
    )


def reduction_identity_check(
    D: int,
    d: int,
    char: EpsCharacter,
    v: int,
    M: int,
    w: int,
    factorization: Optional[EpsFactorization] = None,
) -> ReductionCheck:
    """
    Recompute S_v(w) class by class: for u = k0 j (mod k1),

        eps((u + v sqrt(-D))/2) = eps0(k1/2) eps1((k0 j + v sqrt(-D))/2) eps0(l),  u = k0 j + k1 l,

    and compare with the direct sum. The first (j, u) whose term differs is the witness.
    """
    fac = factorization or factor_eps(char)
    k0, k1 = fac.k0, fac.k1
    direct = int(char_sum(D, d, char, v, M, w).sum_value)
    half = fac.eps0(k1 // 2)
    reduced = 0
    witness = None
    for j in range(1, k1 + 1):
        a = k0 * j
        if (a * a + D * v * v) % 4:
            continue
        outer = half * fac.eps1((a, v))
        l_lo = -(-(M - a) // k1)
        l_hi = -(-(w - a) // k1)
        for l in range(l_lo, l_hi):
            term = outer * fac.eps0(l)
            reduced += term
            if witness is None:
                u = a + k1 * l
                if term != int(char.eps_values(np.array([u]), np.array([v]))[0]):
                    witness = (j, u)
    passed = reduced == direct and witness is None
    if not passed:
        logger.error("reduction identity failed D=%s d=%s v=%s M=%s w=%s witness=%s", D, d, v, M, w, witness)
    return ReductionCheck(passed=passed, direct=direct, reduced=reduced, witness=witness)


def _dyadic_edges(top: float):
    edges = [1]
    while edges[-1] <= top:
        edges.append(edges[-1] * 2)
    return edges


def dyadic_consistency(D: int, d: int, k: int, char: EpsCharacter, tol: float) -> DyadicReport:
    """
    The grouped I2 and C sums, cut at the default norm bound, against the sum
    of their dyadic blocks M <= u < 2M, N <= v < 2N.
    """
    X = default_norm_bound(D, d)
    Q = conductor_scale(D, d)
    V = v_bound(D, X)
    block = lattice_block(char.field, X, 1, V + 1)
    u_edges = _dyadic_edges(float(block.u.max()) if len(block) else 1.0)
    v_edges = _dyadic_edges(float(V))
    n_blocks = (len(u_edges) - 1) * (len(v_edges) - 1)
    block_bound = 4 * log2(2 * D * abs(d)) ** 2
    u_bin = np.searchsorted(u_edges, block.u, side="right")
    v_bin = np.searchsorted(v_edges, block.v, side="right")

    worst = 0.0
    totals = {}
    for name, kernel in (("I2", value_kernel(k)), ("C", derivative_kernel(k))):
        terms, _, _ = block_terms(char, kernel, Q, block)
        full = fsum(terms)
        parts = [
            fsum(terms[(u_bin == i) & (v_bin == j)])
            for i in range(1, len(u_edges))
            for j in range(1, len(v_edges))
        ]
        reassembled = fsum(parts)
        worst = max(worst, abs(full - reassembled))
        totals[name] = (full, reassembled)
    passed = worst <= tol and n_blocks <= block_bound
    return DyadicReport(
        passed=passed,
        blocks=n_blocks,
        block_bound=block_bound,
        full=totals["I2"][0],
        reassembled=totals["I2"][1],
        difference=worst,
    )
