"""
Sweeps over admissible (D, d, k, variant), one SweepRecord per JSON line.

Records are computed by a joblib pool in fixed chunks and written in case
order by the parent process, so the output file is the same for any number
of workers. Existing records are skipped with ``resume``.
"""
import logging
import time
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from joblib import Parallel, delayed
from pydantic import ValidationError
from tqdm import tqdm

from src.api_models.reports import SweepRecord
from src.arithmetic.discriminants import admissible_discriminants, admissible_twists
from src.arithmetic.fields import QuadraticField
from src.character.canonical import build_canonical
from src.central.report import central_quantity, central_report
from src.exceptions import HeckeError, SchemaError
from src.utilities.helpers import chunked, dump_json_line, read_json_lines

logger = logging.getLogger("SweepLogger")

Case = Tuple[int, int, int, int]


@dataclass
class SweepSummary:
    total: int
    written: int
    skipped: int
    errors: int
    matches: int
    checked: int

    def line(self) -> str:
        return (
            f"{self.total} cases, {self.written} written, {self.skipped} already present, "
            f"{self.errors} errors; predicted order = (1-W)/2 on {self.matches}/{self.checked} records"
        )


def enumerate_cases(D_max: int, twists: Sequence[int], weights: Sequence[int], D_min: int = 5) -> List[Case]:
    cases = []
    for D in admissible_discriminants(D_max, D_min):
        field = QuadraticField(D)
        variants = len(build_canonical(field))
        for d in admissible_twists(D, twists):
            for k in weights:
                if gcd(2 * k - 1, field.h) != 1:
                    continue
                cases.extend((D, d, k, v) for v in range(variants))
    return cases


def compute_record(case: Case, tol: float, timings: bool = False) -> SweepRecord:
    D, d, k, variant = case
    start = time.perf_counter()
    try:
        report = central_report(D, d, k, variant, tol=tol, threads=1)
        record = SweepRecord(
            D=D,
            d=d,
            k=k,
            h=report.h,
            variant_index=variant,
            W=report.W,
            value=central_quantity(report),
            predicted_order=report.predicted_order,
            tol=tol,
            norm_bound=report.norm_bound,
            scale=report.scale,
            afe_residual=report.afe_residual,
        )
    except HeckeError as e:
        logger.warning("sweep case %s failed: %s", case, e.detail, exc_info=1)
        record = SweepRecord(
            D=D, d=d, k=k, h=QuadraticField(D).h, variant_index=variant, W=0, value=0.0,
            predicted_order="inconclusive", tol=tol, norm_bound=0.0, scale=0.0, afe_residual=0.0,
            error=f"{type(e).__name__}: {e.detail}",
        )
    if timings:
        record.wall_time = time.perf_counter() - start
    return record


def record_line(record: SweepRecord, timings: bool = False) -> bytes:
    exclude = None if timings else {"wall_time"}
    return dump_json_line(record.model_dump(exclude=exclude))


def load_records(path: Path) -> List[SweepRecord]:
    records = []
    try:
        for row in read_json_lines(path):
            records.append(SweepRecord.model_validate(row))
    except ValidationError as e:
        raise SchemaError(f"{path}: record does not match schema: {e.errors()[0]['msg']}")
    return records


def run_sweep(
    D_max: int,
    twists: Sequence[int],
    weights: Sequence[int],
    out: Path,
    tol: float,
    threads: int = 1,
    resume: bool = False,
    timings: bool = False,
    progress: bool = True,
    D_min: int = 5,
) -> SweepSummary:
    out = Path(out)
    cases = enumerate_cases(D_max, twists, weights, D_min)
    existing = load_records(out) if resume else []
    done = {r.key for r in existing}
    todo = [c for c in cases if c not in done]
    logger.info("sweep D<=%s twists=%s weights=%s: %d cases, %d to compute", D_max, list(twists), list(weights), len(cases), len(todo))

    mode = "ab" if resume else "wb"
    new_records: List[SweepRecord] = []
    with open(out, mode) as fh, tqdm(total=len(todo), disable=not progress, desc="sweep") as bar:
        for chunk in chunked(todo, max(4 * threads, 1)):
            if threads > 1:
                records = Parallel(n_jobs=threads)(delayed(compute_record)(c, tol, timings) for c in chunk)
            else:
                records = [compute_record(c, tol, timings) for c in chunk]
            for record in records:
                fh.write(record_line(record, timings))
            fh.flush()
            new_records.extend(records)
            bar.update(len(chunk))

    all_records = existing + new_records
    checked = [r for r in all_records if r.error is None]
    summary = SweepSummary(
        total=len(cases),
        written=len(new_records),
        skipped=len(cases) - len(todo),
        errors=sum(r.error is not None for r in all_records),
        matches=sum(r.order_matches_root_number for r in checked),
        checked=len(checked),
    )
    logger.info(summary.line())
    return summary
