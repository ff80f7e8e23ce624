"""
Desk-scale invariant suites. Each suite returns (passed, witness); the runner
times it and logs to selftest.log.
"""
import logging
import time
from dataclasses import dataclass
from math import pi, sqrt
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from src.arithmetic.discriminants import admissible_discriminants, admissible_twists
from src.arithmetic.fields import QuadraticField
from src.arithmetic.forms import class_number
from src.character.canonical import make_character
from src.character.factorization import factor_eps
from src.character.validation import validate_character
from src.central.approximations import I1, I1_contour, R1_liouville_route, Rk
from src.central.functional_equation import root_number
from src.charsum.sums import dyadic_consistency, reduction_identity_check
from src.config.settings import get_setting
from src.dirichlet.coefficients import an_coefficients, convolution_coefficients
from src.dirichlet.series import L_D_at_1
from src.exceptions import HeckeError
from src.kernels.milleryang import miller_yang_I
from src.utilities.helpers import load_defaults

logger = logging.getLogger("SelfTest")
settings = get_setting()

SuiteResult = Tuple[bool, Any]


@dataclass
class SuiteOutcome:
    name: str
    passed: bool
    seconds: float
    witness: Any = None


def suite_miller_yang(cfg: Dict) -> SuiteResult:
    value = miller_yang_I(4.0, 1e-8)
    if not value > 0.0351:
        return False, {"x": 4.0, "I": value}
    for x in cfg["miller_yang_grid"]:
        v = miller_yang_I(float(x), 1e-8)
        if not v > 0:
            return False, {"x": x, "I": v}
    series, contour = miller_yang_I(4.0, 1e-8, "series"), miller_yang_I(4.0, 1e-8, "contour")
    if abs(series - contour) > 1e-7:
        return False, {"x": 4.0, "series": series, "contour": contour}
    return True, None


def suite_coefficients(cfg: Dict) -> SuiteResult:
    for D in (7, 8, 11, 23, 24):
        for d in admissible_twists(D, (1, 5, -3)):
            a = an_coefficients(D, d, 100_000)
            b = convolution_coefficients(D, d, 10_000)
            diff = np.flatnonzero(a[1:10_001] != b[1:])
            if diff.size:
                n = int(diff[0]) + 1
                return False, {"D": D, "d": d, "n": n, "euler": int(a[n]), "convolution": int(b[n])}
    return True, None


def suite_class_number(cfg: Dict) -> SuiteResult:
    for D in admissible_discriminants(cfg["class_number_D_max"], 7):
        if D % 2 == 0:
            continue
        formula = 2 * sqrt(D) * L_D_at_1(D, 1).primitive / (2 * pi)
        if abs(formula - class_number(D)) > 0.4:
            return False, {"D": D, "forms": class_number(D), "formula": formula}
    if abs(L_D_at_1(7, 1).value - pi / sqrt(7)) > 1e-8:
        return False, {"D": 7, "L1": L_D_at_1(7, 1).value}
    return True, None


def suite_characters(cfg: Dict) -> SuiteResult:
    for D in (7, 8, 11, 15, 23, 24, 31, 40, 56, 71):
        for d in admissible_twists(D, (1, 5, -3, -4)):
            report = validate_character(make_character(D, d, 1), seed=cfg["seed"], samples=200)
            if not report.passed:
                return False, {"D": D, "d": d, "checks": report.checks, "witnesses": report.witnesses}
    return True, None


def suite_reduction_identity(cfg: Dict) -> SuiteResult:
    rng = np.random.default_rng(cfg["seed"])
    factorizations = {}
    for _ in range(cfg["reduction_tuples"]):
        D = int(rng.choice([7, 11, 23]))
        d = int(rng.choice([1, 5, -3]))
        if d not in admissible_twists(D, (d,)):
            d = 1
        v = int(rng.integers(1, 30))
        M = int(rng.integers(1, 500))
        w = int(rng.integers(M, 501))
        char = make_character(D, d, 1)
        if (D, d) not in factorizations:
            factorizations[(D, d)] = factor_eps(char)
        check = reduction_identity_check(D, d, char, v, M, w, factorizations[(D, d)])
        if not check.passed:
            return False, {"D": D, "d": d, "v": v, "M": M, "w": w, "witness": check.witness}
    return True, None


def suite_dyadic(cfg: Dict) -> SuiteResult:
    for D, d, k in cfg["dyadic_cases"]:
        report = dyadic_consistency(D, d, k, make_character(D, d, k), 1e-10)
        if not report.passed:
            return False, {"D": D, "d": d, "k": k, **report.model_dump()}
    return True, None


def suite_r1_routes(cfg: Dict) -> SuiteResult:
    tol = 1e-6
    for D, d in cfg["r1_cases"]:
        g = Rk(D, d, 1, tol, cross_check=False).value
        other = R1_liouville_route(D, d, tol)
        if abs(g - other) > 2 * tol:
            return False, {"D": D, "d": d, "G_route": g, "I_route": other}
    return True, None


def suite_i1_contour(cfg: Dict) -> SuiteResult:
    for D, d, k in cfg["i1_contour_cases"]:
        closed = I1(D, d, k, 1e-9).value
        contour = I1_contour(D, d, k, 1e-7)
        if abs(closed - contour) > 1e-6:
            return False, {"D": D, "d": d, "k": k, "closed": closed, "contour": contour}
    return True, None


def suite_root_number(cfg: Dict) -> SuiteResult:
    for D, d, k in ((7, 1, 1), (8, 1, 1), (11, 5, 1), (23, 1, 1), (19, -4, 2)):
        char = make_character(D, d, k)
        rn = root_number(D, d, k, char, settings.tol)
        if rn.W not in (1, -1):
            return False, {"D": D, "d": d, "k": k, "W_solved": rn.W_solved}
    return True, None


SUITES: List[Tuple[str, Callable[[Dict], SuiteResult]]] = [
    ("miller_yang", suite_miller_yang),
    ("coefficients", suite_coefficients),
    ("class_number", suite_class_number),
    ("characters", suite_characters),
    ("reduction_identity", suite_reduction_identity),
    ("dyadic", suite_dyadic),
    ("r1_routes", suite_r1_routes),
    ("i1_contour", suite_i1_contour),
    ("root_number", suite_root_number),
]


def run_selftest(seed: Optional[int] = None, only: Optional[List[str]] = None) -> List[SuiteOutcome]:
    cfg = dict(load_defaults("SELFTEST"))
    if seed is not None:
        cfg["seed"] = seed
    outcomes = []
    for name, suite in SUITES:
        if only and name not in only:
            continue
        start = time.perf_counter()
        try:
            passed, witness = suite(cfg)
        except HeckeError as e:
            logger.error("suite %s raised %s", name, e.detail, exc_info=1)
            passed, witness = False, {"error": f"{type(e).__name__}: {e.detail}", "witness": e.witness}
        outcome = SuiteOutcome(name, passed, time.perf_counter() - start, witness)
        logger.info("suite %s: %s in %.2fs", name, "pass" if passed else "FAIL", outcome.seconds)
        if not passed:
            logger.error("suite %s witness: %s", name, witness)
        outcomes.append(outcome)
    return outcomes
