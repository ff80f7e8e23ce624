import orjson
import pytest

from src.exceptions import SchemaError
from src.sweep import compute_record, enumerate_cases, load_records, record_line
from src.utilities.helpers import chunked, dump_json_line, load_defaults, read_json_lines


def test_load_defaults_sections():
    defaults = load_defaults()
    assert {"SWEEP", "SELFTEST", "SURVEY"} <= set(defaults)
    assert load_defaults("SWEEP")["weights"] == [1, 2]


def test_json_lines(tmp_path):
    path = tmp_path / "rows.jsonl"
    rows = [{"D": 7, "value": 0.5}, {"D": 8, "value": -1.25}]
    path.write_bytes(b"".join(dump_json_line(r) for r in rows) + b"\n")
    assert list(read_json_lines(path)) == rows
    assert list(read_json_lines(tmp_path / "missing.jsonl")) == []


def test_chunked():
    assert list(chunked(list(range(7)), 3)) == [[0, 1, 2], [3, 4, 5], [6]]
    assert list(chunked([], 3)) == []


def test_enumerate_cases():
    cases = enumerate_cases(15, [1], [1])
    assert {c[0] for c in cases} == {7, 8, 11, 15}
    assert cases[0] == (7, 1, 1, 0)


def test_enumerate_cases_skips_weights_sharing_class_number():
    # h(-23) = 3 and 2k - 1 = 3 for k = 2
    cases = enumerate_cases(23, [1], [2], D_min=23)
    assert cases == []


def test_record_line_hides_timings():
    record = compute_record((7, 1, 1, 0), 1e-8, timings=True)
    assert record.wall_time is not None
    assert "wall_time" not in orjson.loads(record_line(record))
    assert "wall_time" in orjson.loads(record_line(record, timings=True))
    assert record.error is None
    assert record.order_matches_root_number


def test_record_on_minus_one_case():
    record = compute_record((11, 1, 1, 0), 1e-8)
    assert record.error is None
    assert record.W == -1
    assert record.predicted_order == 1
    assert record.order_matches_root_number


def test_error_record_for_failing_case(monkeypatch):
    from src.exceptions import ToleranceError

    def boom(*args, **kwargs):
        raise ToleranceError("tolerance not met", achieved_bound=1.0)

    monkeypatch.setattr("src.sweep.central_report", boom)
    record = compute_record((7, 1, 1, 0), 1e-8)
    assert record.W == 0
    assert record.error.startswith("ToleranceError")
    assert record.predicted_order == "inconclusive"


def test_load_records_rejects_unknown_fields(tmp_path):
    path = tmp_path / "bad.jsonl"
    row = orjson.loads(record_line(compute_record((7, 1, 1, 0), 1e-8)))
    row["extra"] = 1
    path.write_bytes(dump_json_line(row))
    with pytest.raises(SchemaError):
        load_records(path)
