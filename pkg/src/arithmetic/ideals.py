"""
Integral ideals of the ring of integers, stored as Z-modules in Hermite
normal form Z*a + Z*(b + c*omega) with c | a, c | b and 0 <= b < a.
"""
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np

from src.arithmetic.fields import LatticePoint, QuadraticField
from src.exceptions import InvalidParameterError

RingElement = Union[LatticePoint, Tuple[int, int]]


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


@dataclass(frozen=True)
class IdealZModule:
    field: QuadraticField
    a: int
    b: int
    c: int

    @property
    def norm(self) -> int:
        return self.a * self.c

    def contains(self, x: int, y: int) -> bool:
        if y % self.c:
            return False
        return (x - (y // self.c) * self.b) % self.a == 0

    def contains_point(self, p: LatticePoint) -> bool:
        return self.contains(*self.field.to_basis(p.u, p.v))

    def reduce(self, x, y):
        """Canonical residue (x', y') with 0 <= x' < a, 0 <= y' < c. Works on numpy arrays."""
        q = y // self.c
        r = y - q * self.c
        return (x - q * self.b) % self.a, r

    def residue_index(self, x, y):
        xr, yr = self.reduce(x, y)
        return xr * self.c + yr

    def residue_from_index(self, idx: int) -> Tuple[int, int]:
        return divmod(idx, self.c)

    def residues(self) -> Iterator[Tuple[int, int]]:
        for x in range(self.a):
            for y in range(self.c):
                yield x, y

    def is_invertible(self, x: int, y: int) -> bool:
        # every prime dividing the norms used here ramifies, so coprimality of norms decides units
        return gcd(self.field.norm_basis(x, y), self.norm) == 1

    def invertible_mask(self) -> np.ndarray:
        xs, ys = np.divmod(np.arange(self.norm, dtype=np.int64), self.c)
        norms = xs * xs + self.field.omega_trace * xs * ys + self.field.omega_norm * ys * ys
        return np.gcd(norms, self.norm) == 1

    def is_omega_stable(self) -> bool:
        f = self.field
        return all(self.contains(*f.mul_basis((0, 1), g)) for g in ((self.a, 0), (self.b, self.c)))


def _as_basis(field: QuadraticField, g: RingElement) -> Tuple[int, int]:
    if isinstance(g, LatticePoint):
        return field.to_basis(g.u, g.v)
    u, v = g
    if not field.is_integral(u, v):
        raise InvalidParameterError(f"generator ({u}, {v}) is not integral")
    return field.to_basis(u, v)


def hnf_from_vectors(vectors: Iterable[Tuple[int, int]]) -> Tuple[int, int, int]:
    pivot = None
    zero_row_xs: List[int] = []
    for x, y in vectors:
        if y == 0:
            zero_row_xs.append(x)
            continue
        if pivot is None:
            pivot = (x, y)
            continue
        px, py = pivot
        g, s, t = _xgcd(py, y)
        zero_row_xs.append((y // g) * px - (py // g) * x)
        pivot = (s * px + t * x, g)
    a = 0
    for x in zero_row_xs:
        a = gcd(a, x)
    if pivot is None or a == 0:
        raise InvalidParameterError("zero ideal")
    px, c = pivot
    if c < 0:
        px, c = -px, -c
    return a, px % a, c


def ideal_from_generators(field: QuadraticField, gens: Sequence[RingElement]) -> IdealZModule:
    """
    HNF basis of the ideal generated by ``gens``: the Z-span of g and
    g*omega for each generator.
    """
    basis_gens = [_as_basis(field, g) for g in gens]
    if not basis_gens or all(g == (0, 0) for g in basis_gens):
        raise InvalidParameterError("zero ideal")
    vectors = []
    for g in basis_gens:
        vectors.append(g)
        vectors.append(field.mul_basis((0, 1), g))
    a, b, c = hnf_from_vectors(vectors)
    ideal = IdealZModule(field, a, b, c)
    if not ideal.is_omega_stable():
        raise InvalidParameterError(f"Z-module {a, b, c} is not closed under omega")
    return ideal


def least_positive_integer(ideal: IdealZModule) -> int:
    return ideal.a
