"""
Canonical quadratic character eps_can on (O/f)^x, f = (2 sqrt(-D), D), and
its twists eps(alpha) = eps_can(alpha) * (d / N(alpha)).
"""
import logging
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.arithmetic.discriminants import is_fundamental_discriminant, kronecker
from src.arithmetic.fields import LatticePoint, QuadraticField
from src.arithmetic.ideals import IdealZModule, ideal_from_generators
from src.exceptions import CharacterError, InvalidParameterError
from src.utilities.messages import class_number_message, invalid_twist_message, weight_message

logger = logging.getLogger(__name__)


def canonical_conductor(field: QuadraticField, d: int = 1) -> IdealZModule:
    """d * (2 sqrt(-D), D) in HNF."""
    return ideal_from_generators(field, [(0, 4 * d), (2 * field.D * d, 0)])


@dataclass(frozen=True)
class CanonicalCharacter:
    """Sign table of eps_can indexed by residue index modulo ``conductor`` (0 = not invertible)."""

    field: QuadraticField
    conductor: IdealZModule
    table: np.ndarray
    variant_index: int = 0
    variant_count: int = 1

    def value_basis(self, x, y):
        return self.table[self.conductor.residue_index(x, y)]


class _ResidueGroup:
    """Unit group of O/f on residue indices."""

    def __init__(self, conductor: IdealZModule):
        self.conductor = conductor
        self.field = conductor.field
        mask = conductor.invertible_mask()
        self.elements = [int(i) for i in np.flatnonzero(mask)]

    def index(self, x: int, y: int) -> int:
        return int(self.conductor.residue_index(x, y))

    def mul(self, i: int, j: int) -> int:
        p = self.conductor.residue_from_index(i)
        q = self.conductor.residue_from_index(j)
        return self.index(*self.field.mul_basis(p, q))

    def square_class_coordinates(self) -> Tuple[int, Dict[int, int]]:
        """
        Basis of G/G^2 over the two-element field. Returns (rank, coords) where
        coords[g] is the bitmask of g's square class in that basis.
        """
        coords = {self.mul(g, g): 0 for g in self.elements}
        rank = 0
        for g in self.elements:
            if g in coords:
                continue
            bit = 1 << rank
            for h, m in list(coords.items()):
                coords[self.mul(g, h)] = m | bit
            rank += 1
        return rank, coords


def _solve_gf2(rows: Sequence[Tuple[int, int]], rank: int) -> List[int]:
    """All lambda in GF(2)^rank with popcount(row & lambda) = rhs mod 2 for every row."""
    pivots: Dict[int, Tuple[int, int]] = {}
    for row, rhs in rows:
        while row:
            hb = row.bit_length() - 1
            if hb not in pivots:
                pivots[hb] = (row, rhs)
                break
            prow, prhs = pivots[hb]
            row ^= prow
            rhs ^= prhs
        if row == 0 and rhs:
            raise CharacterError("character constraint system inconsistent")
    free = [b for b in range(rank) if b not in pivots]
    solutions = []
    for assignment in range(1 << len(free)):
        lam = 0
        for i, b in enumerate(free):
            if assignment >> i & 1:
                lam |= 1 << b
        for hb in sorted(pivots):
            row, rhs = pivots[hb]
            if ((row & ~(1 << hb)) & lam).bit_count() % 2 != rhs:
                lam |= 1 << hb
        solutions.append(lam)
    return solutions


def solve_characters(field: QuadraticField, conductor: IdealZModule) -> List[np.ndarray]:
    """
    Every quadratic character of (O/conductor)^x with eps(n) = (-D/n) on
    integers n prime to the conductor and eps(-1) = -1, as sign tables in
    lexicographic order.
    """
    group = _ResidueGroup(conductor)
    rank, coords = group.square_class_coordinates()
    rows = []
    for n in range(1, conductor.norm + 1):
        if gcd(n, conductor.norm) != 1:
            continue
        rows.append((coords[group.index(n, 0)], int(kronecker(-field.D, n) == -1)))
    rows.append((coords[group.index(-1, 0)], 1))
    tables = []
    for lam in _solve_gf2(rows, rank):
        table = np.zeros(conductor.norm, dtype=np.int8)
        for g in group.elements:
            table[g] = -1 if (lam & coords[g]).bit_count() % 2 else 1
        tables.append(table)
    tables.sort(key=lambda t: tuple(t.tolist()))
    logger.info("D=%d: square-class rank %d, %d character solutions", field.D, rank, len(tables))
    return tables


def closed_form_table(field: QuadraticField, conductor: IdealZModule) -> np.ndarray:
    """D odd: eps_can(alpha) = (-D/a) for any integer a = alpha mod (sqrt(-D))."""
    inv2 = pow(2, -1, field.D)
    table = np.zeros(conductor.norm, dtype=np.int8)
    for idx in range(conductor.norm):
        x, y = conductor.residue_from_index(idx)
        u, _ = field.from_basis(x, y)
        table[idx] = kronecker(-field.D, u * inv2 % field.D)
    return table


@lru_cache(maxsize=256)
def build_canonical(field: QuadraticField) -> Tuple[CanonicalCharacter, ...]:
    conductor = canonical_conductor(field)
    if field.D % 2:
        tables = [closed_form_table(field, conductor)]
    else:
        tables = solve_characters(field, conductor)
        if not tables:
            raise CharacterError("character constraint system inconsistent")
    return tuple(
        CanonicalCharacter(field, conductor, t, variant_index=i, variant_count=len(tables))
        for i, t in enumerate(tables)
    )


def validate_twist(field: QuadraticField, d: int) -> None:
    if d != 1 and not is_fundamental_discriminant(d):
        raise InvalidParameterError(invalid_twist_message.format(value=d, D=field.D))
    if gcd(d, field.D) != 1:
        raise InvalidParameterError(invalid_twist_message.format(value=d, D=field.D))


def validate_weight(field: QuadraticField, k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise InvalidParameterError(weight_message.format(k=k))
    g = gcd(2 * k - 1, field.h)
    if g != 1:
        raise InvalidParameterError(class_number_message.format(m=2 * k - 1, h=field.h, g=g))


@dataclass(frozen=True)
class EpsCharacter:
    """
    eps = eps_can * (d / N(.)) together with the weight k; chi((alpha)) =
    eps(alpha) alpha^(2k-1).
    """

    canonical: CanonicalCharacter
    d: int = 1
    k: int = 1

    @property
    def field(self) -> QuadraticField:
        return self.canonical.field

    @property
    def variant_index(self) -> int:
        return self.canonical.variant_index

    @property
    def table(self) -> np.ndarray:
        return self.canonical.table

    @cached_property
    def conductor(self) -> IdealZModule:
        return canonical_conductor(self.field, self.d)

    @cached_property
    def twist_table(self) -> np.ndarray:
        m = abs(self.d)
        return np.array([kronecker(self.d, n if n else m) for n in range(m)], dtype=np.int8)

    def twist_values(self, norms):
        return self.twist_table[np.asarray(norms) % abs(self.d)]

    def eps_value(self, p: LatticePoint) -> int:
        x, y = self.field.to_basis(p.u, p.v)
        return int(self.canonical.value_basis(x, y)) * kronecker(self.d, p.norm)

    def eps_values(self, u: np.ndarray, v: np.ndarray, n4: np.ndarray = None) -> np.ndarray:
        """Vectorized eps on arrays of integral (u, v)."""
        if n4 is None:
            n4 = u * u + self.field.D * v * v
        if self.field.D % 2:
            x = (u - v) // 2
        else:
            x = u // 2
        signs = self.canonical.value_basis(x, v).astype(np.int64)
        return signs * self.twist_values(n4 // 4)

    def chi_value(self, p: LatticePoint) -> complex:
        e = self.eps_value(p)
        if e == 0:
            return 0j
        U, V, den = p.power(2 * self.k - 1)
        return e * complex(U / den, V * self.field.D**0.5 / den)


def make_character(D: int, d: int = 1, k: int = 1, variant: int = 0, cache_dir: Optional[str] = None) -> EpsCharacter:
    """
    Validate (D, d, k) and build the twisted character for the chosen variant.
    With ``cache_dir`` the canonical tables are read from (or written to) disk.
    """
    field = QuadraticField(D)
    validate_twist(field, d)
    validate_weight(field, k)
    if cache_dir is not None:
        from src.character.storage import cached_canonical

        variants = cached_canonical(field, cache_dir)
    else:
        variants = build_canonical(field)
    if not 0 <= variant < len(variants):
        raise InvalidParameterError(f"variant {variant} out of range: D={D} has {len(variants)} canonical characters")
    return EpsCharacter(variants[variant], d=d, k=k)
