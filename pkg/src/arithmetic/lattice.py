"""
Enumeration of generators of principal ideals (alpha), alpha not rational,
as lattice points (u, v) with u > 0, v != 0 and 4 | u^2 + D v^2.
"""
from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Optional, Tuple

import numpy as np

from src.arithmetic.fields import LatticePoint, QuadraticField


@dataclass
class LatticeBlock:
    """Vectorized slice of lattice points; ``n4`` is u^2 + D v^2 = 4 N(alpha)."""

    u: np.ndarray
    v: np.ndarray
    n4: np.ndarray

    def __len__(self):
        return int(self.u.size)

    @property
    def norm(self) -> np.ndarray:
        return self.n4 // 4


def v_bound(D: int, norm_bound: float) -> int:
    return isqrt(int(4 * norm_bound) // D)


def lattice_block(
    field: QuadraticField,
    norm_bound: float,
    v_lo: int,
    v_hi: int,
) -> LatticeBlock:
    """All points with v_lo <= v < v_hi (v != 0), u > 0 and N <= norm_bound."""
    D = field.D
    limit = int(4 * norm_bound)
    us, vs = [], []
    for v in range(v_lo, v_hi):
        if v == 0:
            continue
        rest = limit - D * v * v
        if rest < 1:
            continue
        U = isqrt(rest)
        if D % 2:
            start = 2 if v % 2 == 0 else 1
        else:
            start = 2
        u = np.arange(start, U + 1, 2, dtype=np.int64)
        us.append(u)
        vs.append(np.full(u.size, v, dtype=np.int64))
    if not us:
        empty = np.zeros(0, dtype=np.int64)
        return LatticeBlock(empty, empty.copy(), empty.copy())
    u = np.concatenate(us)
    v = np.concatenate(vs)
    return LatticeBlock(u, v, u * u + D * v * v)


def principal_lattice_points(field: QuadraticField, norm_bound: float) -> Iterator[LatticePoint]:
    """
    One generator per non-rational principal ideal of norm <= norm_bound,
    ordered by norm, then u, then v.
    """
    V = v_bound(field.D, norm_bound)
    block = lattice_block(field, norm_bound, -V, V + 1)
    order = np.lexsort((block.v, block.u, block.n4))
    for i in order:
        yield LatticePoint(int(block.u[i]), int(block.v[i]), field.D)


def v_slices(V: int, slice_size: int, positive_only: bool = False) -> Iterator[Tuple[int, int]]:
    """Fixed partition of the v-range into half-open slices, independent of worker count."""
    lo = 1 if positive_only else -V
    for start in range(lo, V + 1, slice_size):
        yield start, min(start + slice_size, V + 1)
