import csv

import numpy as np
import orjson
import pytest

from src.character.canonical import make_character
from src.character.factorization import factor_eps
from src.charsum.sums import bound_ratio, char_sum, dyadic_consistency, reduction_identity_check
from src.charsum.survey import CSV_COLUMNS, burgess_ratio_survey, draw_samples, write_survey_csv, write_survey_summary
from src.exceptions import InvalidParameterError


def test_char_sum_small_window():
    record = char_sum(7, 1, make_character(7), v=1, M=1, w=4)
    # u = 1, 3 with eps = (-7/4) = 1 and (-7/5) = -1
    assert record.n_terms == 2
    assert record.sum_value == 0
    assert record.bound_ratio == 0


def test_char_sum_empty_window():
    record = char_sum(7, 1, make_character(7), v=3, M=10, w=10)
    assert record.n_terms == 0
    assert record.sum_value == 0


def test_char_sum_rejects_bad_window():
    with pytest.raises(InvalidParameterError):
        char_sum(7, 1, make_character(7), v=1, M=0, w=5)
    with pytest.raises(InvalidParameterError):
        char_sum(7, 1, make_character(7), v=1, M=6, w=5)


def test_bound_ratio_normalization():
    assert bound_ratio(-3.0, 16, 1, 4) == pytest.approx(3.0 / (1 + 2 * 16 ** (3 / 16)))


@pytest.mark.parametrize("D", [7, 11, 23])
@pytest.mark.parametrize("d", [1, 5, -3])
def test_reduction_identity_random_tuples(D, d):
    char = make_character(D, d, 1)
    fac = factor_eps(char)
    rng = np.random.default_rng(D * 100 + d)
    for _ in range(10):
        v = int(rng.integers(1, 12))
        M = int(rng.integers(1, 300))
        w = M + int(rng.integers(0, 400))
        check = reduction_identity_check(D, d, char, v, M, w, factorization=fac)
        assert check.passed, check.witness
        assert check.direct == check.reduced


def test_reduction_identity_even_discriminant():
    char = make_character(8, 5, 1)
    check = reduction_identity_check(8, 5, char, v=3, M=5, w=200)
    assert check.passed


@pytest.mark.parametrize("D,d,k", [(7, 1, 1), (23, 5, 1), (11, -3, 2)])
def test_dyadic_consistency(D, d, k):
    report = dyadic_consistency(D, d, k, make_character(D, d, k), 1e-10)
    assert report.passed
    assert report.blocks <= report.block_bound
    assert report.difference <= 1e-10


def test_survey_is_reproducible():
    first = burgess_ratio_survey((7, 40), [1, 5], 30, seed=11)
    second = burgess_ratio_survey((7, 40), [1, 5], 30, seed=11, threads=2)
    assert [r.model_dump() for r in first.records] == [r.model_dump() for r in second.records]
    assert np.all(np.isfinite(first.ratios))
    assert np.all(first.ratios >= 0)


def test_survey_samples_admissible():
    for D, d, v, M, w in draw_samples((7, 60), [1, -3, 5], 50, seed=3):
        assert 7 <= D <= 60
        assert d in (1, -3, 5)
        assert 1 <= v <= 20
        assert M < w <= 3 * M


def test_survey_outputs(tmp_path):
    table = burgess_ratio_survey((7, 30), [1], 12, seed=5)
    csv_path = tmp_path / "survey.csv"
    json_path = tmp_path / "survey.json"
    write_survey_csv(table, csv_path)
    write_survey_summary(table, json_path)
    with open(csv_path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == CSV_COLUMNS
    assert len(rows) == 13
    summary = orjson.loads(json_path.read_bytes())
    assert summary["seed"] == 5
    assert summary["samples"] == 12
    assert summary["max_ratio"] >= summary["median_ratio"]


def test_empty_survey_summary():
    table = burgess_ratio_survey((4, 5), [1], 10, seed=1)
    assert table.records == []
    assert table.summary()["samples"] == 0
