"""
eps = eps0 * eps1 with eps0 of conductor c0 = sqrt(-D)/(sqrt(-D), 4) and eps1
carrying the twist and the 2-part. Both factors are read off eps through
integer CRT idempotents e0 + e1 = 1, e0 in c0, e1 in c1.
"""
import logging
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from src.arithmetic.fields import LatticePoint
from src.arithmetic.ideals import IdealZModule, _xgcd, ideal_from_generators, least_positive_integer
from src.character.canonical import EpsCharacter
from src.exceptions import CharacterError

logger = logging.getLogger(__name__)

Element = Union[LatticePoint, Tuple[int, int], int]


def factor_conductors(char: EpsCharacter) -> Tuple[IdealZModule, IdealZModule]:
    field, d = char.field, char.d
    if field.D % 2:
        c0 = ideal_from_generators(field, [(0, 2)])
        c1 = ideal_from_generators(field, [(0, 2 * d), (8 * d, 0)])
    else:
        # the 2-part of eps_can needs p2^5 = (2 sqrt(-D), 8), not (sqrt(-D), 4)
        c0 = ideal_from_generators(field, [(0, 1), (field.D // 4, 0)])
        c1 = ideal_from_generators(field, [(0, 4 * d), (16 * d, 0)])
    return c0, c1


def _uv(x: Element) -> Tuple[int, int]:
    if isinstance(x, LatticePoint):
        return x.u, x.v
    if isinstance(x, tuple):
        return x
    return 2 * int(x), 0


@dataclass(frozen=True)
class FactorCharacter:
    parent: EpsCharacter
    conductor: IdealZModule
    unit_here: int  # idempotent congruent to 1 modulo this conductor
    unit_other: int

    def __call__(self, x: Element) -> int:
        u, v = _uv(x)
        lifted = LatticePoint(u * self.unit_here + 2 * self.unit_other, v * self.unit_here, self.parent.field.D)
        return self.parent.eps_value(lifted)


@dataclass(frozen=True)
class EpsFactorization:
    eps0: FactorCharacter
    eps1: FactorCharacter
    k0: int
    k1: int


def factor_eps(char: EpsCharacter, samples: int = 200, seed: int = 0) -> EpsFactorization:
    c0, c1 = factor_conductors(char)
    k0 = least_positive_integer(c0)
    half_k1 = least_positive_integer(c1)
    g, s, t = _xgcd(k0, half_k1)
    if g != 1:
        raise CharacterError(f"factorization not found: conductors not coprime (k0={k0}, k1/2={half_k1})")
    e0, e1 = s * k0, t * half_k1
    eps0 = FactorCharacter(char, c0, unit_here=e1, unit_other=e0)
    eps1 = FactorCharacter(char, c1, unit_here=e0, unit_other=e1)
    fac = EpsFactorization(eps0, eps1, k0, 2 * half_k1)
    _check_factorization(char, fac, samples, seed)
    return fac


def _random_points(D: int, rng: np.random.Generator, n: int, span: int = 400):
    pts = []
    while len(pts) < n:
        u, v = (int(z) for z in rng.integers(-span, span, size=2))
        if (u * u + D * v * v) % 4 == 0:
            pts.append(LatticePoint(u, v, D))
    return pts


def _check_factorization(char: EpsCharacter, fac: EpsFactorization, samples: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    D = char.field.D
    for p in _random_points(D, rng, samples):
        product = fac.eps0(p) * fac.eps1(p)
        if product != char.eps_value(p):
            raise CharacterError(f"factorization not found: eps0*eps1 != eps at {p}", witness=(p.u, p.v))
        shifted0 = LatticePoint(p.u + 2 * fac.k0, p.v, D)
        shifted1 = LatticePoint(p.u + fac.k1, p.v, D)
        if fac.eps0(shifted0) != fac.eps0(p) or fac.eps1(shifted1) != fac.eps1(p):
            raise CharacterError(f"factorization not found: factor not periodic modulo its conductor at {p}", witness=(p.u, p.v))
    logger.info("factorization D=%d d=%d: k0=%d k1=%d", D, char.d, fac.k0, fac.k1)
