import logging
from math import gcd
from typing import Optional

import numpy as np

from src.api_models.reports import ValidationReport
from src.arithmetic.discriminants import kronecker
from src.arithmetic.fields import LatticePoint
from src.character.canonical import EpsCharacter, closed_form_table
from src.character.factorization import _random_points

logger = logging.getLogger(__name__)


def _homomorphism_witness(char: EpsCharacter, rng: np.random.Generator, samples: int) -> Optional[list]:
    """Exhaustive over residue pairs of eps_can when small, then sampled on twisted eps."""
    conductor, field, table = char.canonical.conductor, char.field, char.table
    units = np.flatnonzero(table)
    if units.size**2 <= 2_000_000:
        xs, ys = np.divmod(units, conductor.c)
        X1, X2 = np.meshgrid(xs, xs, indexing="ij")
        Y1, Y2 = np.meshgrid(ys, ys, indexing="ij")
        yy = Y1 * Y2
        px = X1 * X2 - field.omega_norm * yy
        py = X1 * Y2 + X2 * Y1 + field.omega_trace * yy
        prod = table[conductor.residue_index(px, py)]
        expected = np.outer(table[units], table[units])
        bad = np.argwhere(prod != expected)
        if bad.size:
            i, j = bad[0]
            return ["residues", int(units[i]), int(units[j])]
    D = field.D
    pts = _random_points(D, rng, 2 * samples)
    for p, q in zip(pts[::2], pts[1::2]):
        prod = LatticePoint((p.u * q.u - D * p.v * q.v) // 2, (p.u * q.v + p.v * q.u) // 2, D)
        if char.eps_value(prod) != char.eps_value(p) * char.eps_value(q):
            return ["points", [p.u, p.v], [q.u, q.v]]
    return None


def validate_character(char: EpsCharacter, seed: int = 0, samples: int = 500, n_max: int = 1000) -> ValidationReport:
    """
    Checks (a) multiplicativity, (b) eps(n) = (-D/n) for integers n < n_max
    prime to the conductor, (c) eps(-1) = -1, (d) agreement with the closed
    form when D is odd, (e) eps(conj alpha) = eps(alpha).
    """
    rng = np.random.default_rng(seed)
    D, d = char.field.D, char.d
    checks, witnesses = {}, {}

    witness = _homomorphism_witness(char, rng, samples)
    checks["homomorphism"] = witness is None
    if witness is not None:
        witnesses["homomorphism"] = witness

    modulus = char.conductor.norm
    bad_n = next(
        (n for n in range(1, n_max) if gcd(n, modulus) == 1
         and char.eps_value(LatticePoint(2 * n, 0, D)) != kronecker(-D, n)),
        None,
    )
    checks["integer_compatibility"] = bad_n is None
    if bad_n is not None:
        witnesses["integer_compatibility"] = bad_n

    checks["minus_one"] = char.eps_value(LatticePoint(-2, 0, D)) == -1

    if D % 2:
        closed = closed_form_table(char.field, char.canonical.conductor)
        diff = np.flatnonzero(closed != char.table)
        checks["closed_form"] = diff.size == 0
        if diff.size:
            witnesses["closed_form"] = int(diff[0])

    bad_conj = next(
        ([p.u, p.v] for p in _random_points(D, rng, samples) if char.eps_value(p) != char.eps_value(p.conjugate())),
        None,
    )
    checks["conjugation"] = bad_conj is None
    if bad_conj is not None:
        witnesses["conjugation"] = bad_conj

    report = ValidationReport(
        D=D, d=d, variant_index=char.variant_index, passed=all(checks.values()), checks=checks, witnesses=witnesses
    )
    if not report.passed:
        logger.warning("character validation failed for D=%d d=%d: %s", D, d, witnesses)
    return report
