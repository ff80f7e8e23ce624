"""
Observational survey of |S_v(w)| / (|d| + M^1/2 D^3/16 |d|^1/2).
"""
import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import numpy as np
import orjson
from joblib import Parallel, delayed

from src.api_models.reports import CharSumRecord
from src.arithmetic.discriminants import admissible_discriminants, admissible_twists
from src.character.canonical import make_character
from src.charsum.sums import BURGESS_EXPONENT, char_sum

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["D", "d", "v", "M", "w", "S", "bound_ratio"]


@dataclass
class SurveyTable:
    seed: int
    records: List[CharSumRecord] = field(default_factory=list)

    @property
    def ratios(self) -> np.ndarray:
        return np.array([r.bound_ratio for r in self.records], dtype=float)

    def summary(self) -> Dict:
        ratios = self.ratios
        if ratios.size == 0:
            return {"seed": self.seed, "samples": 0, "exponent": BURGESS_EXPONENT}
        q = np.quantile(ratios, [0.5, 0.9, 0.99])
        worst = self.records[int(np.argmax(ratios))]
        return {
            "seed": self.seed,
            "samples": int(ratios.size),
            "exponent": BURGESS_EXPONENT,
            "max_ratio": float(ratios.max()),
            "median_ratio": float(q[0]),
            "p90_ratio": float(q[1]),
            "p99_ratio": float(q[2]),
            "argmax": {"D": worst.D, "d": worst.d, "v": worst.v, "M": worst.M, "w": worst.w},
        }


def draw_samples(D_range: Tuple[int, int], d_set: Sequence[int], sample_size: int, seed: int) -> List[Tuple[int, int, int, int, int]]:
    rng = np.random.default_rng(seed)
    pairs = [(D, d) for D in admissible_discriminants(D_range[1], D_range[0]) for d in admissible_twists(D, d_set)]
    if not pairs:
        return []
    samples = []
    for _ in range(sample_size):
        D, d = pairs[int(rng.integers(len(pairs)))]
        v = int(rng.integers(1, 21))
        M = int(rng.integers(1, 501))
        w = M + int(rng.integers(1, 2 * M + 1))
        samples.append((D, d, v, M, w))
    return samples


def _one(D: int, d: int, v: int, M: int, w: int) -> CharSumRecord:
    return char_sum(D, d, make_character(D, d, 1), v, M, w)


def burgess_ratio_survey(
    D_range: Tuple[int, int],
    d_set: Sequence[int],
    sample_size: int,
    seed: int,
    threads: int = 1,
) -> SurveyTable:
    samples = draw_samples(D_range, d_set, sample_size, seed)
    logger.info("survey D in %s, d in %s: %d samples, seed %d", D_range, list(d_set), len(samples), seed)
    records = Parallel(n_jobs=threads, prefer="threads")(delayed(_one)(*s) for s in samples)
    return SurveyTable(seed=seed, records=list(records))


def write_survey_csv(table: SurveyTable, path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in table.records:
            writer.writerow([r.D, r.d, r.v, r.M, r.w, int(r.sum_value), repr(r.bound_ratio)])


def write_survey_summary(table: SurveyTable, path: Path) -> None:
    Path(path).write_bytes(orjson.dumps(table.summary(), option=orjson.OPT_INDENT_2))
