from dataclasses import replace

import numpy as np
import pytest

from src.arithmetic.discriminants import kronecker
from src.arithmetic.fields import LatticePoint
from src.character.canonical import make_character
from src.character.factorization import factor_eps
from src.character.storage import cached_canonical, deserialize_character, serialize_character
from src.character.validation import validate_character
from src.exceptions import InvalidParameterError, SchemaError


def test_canonical_values_for_D7():
    char = make_character(7)
    assert char.eps_value(LatticePoint(1, 1, 7)) == 1
    assert char.eps_value(LatticePoint(3, 1, 7)) == -1
    assert char.eps_value(LatticePoint(-2, 0, 7)) == -1


@pytest.mark.parametrize("D", [7, 8, 11, 15, 23, 24, 40])
def test_minus_one_and_integers(D):
    char = make_character(D)
    assert char.eps_value(LatticePoint(-2, 0, D)) == -1
    for n in range(1, 200):
        if n % 2 and n % D:
            assert char.eps_value(LatticePoint(2 * n, 0, D)) == kronecker(-D, n)


@pytest.mark.parametrize("D,d", [(7, 1), (7, 5), (7, -3), (8, 1), (8, 5), (11, -4), (23, 1), (24, 5), (15, -7)])
def test_validate_character_passes(D, d):
    report = validate_character(make_character(D, d), seed=1, samples=200)
    assert report.passed, report.witnesses


def test_vectorized_eps_matches_pointwise():
    char = make_character(23, 5)
    u = np.array([1, 3, 5, 7, 2, 4], dtype=np.int64)
    v = np.array([1, 1, 3, 5, 2, 4], dtype=np.int64)
    values = char.eps_values(u, v)
    for i in range(u.size):
        assert values[i] == char.eps_value(LatticePoint(int(u[i]), int(v[i]), 23))


@pytest.mark.parametrize("D,d,k", [(12, 1, 1), (7, 7, 1), (7, -1, 1), (23, 1, 2), (7, 1, 0)])
def test_invalid_parameters_rejected(D, d, k):
    with pytest.raises(InvalidParameterError) as e:
        make_character(D, d, k)
    assert e.value.exit_code == 2


def test_class_number_weight_message():
    with pytest.raises(InvalidParameterError, match="k shares factor with class number"):
        make_character(23, 1, 2)


def test_variant_out_of_range():
    with pytest.raises(InvalidParameterError):
        make_character(7, variant=5)


def test_chi_value_is_eps_times_power():
    char = make_character(7, 1, 2)
    p = LatticePoint(3, 1, 7)
    alpha = complex(p)
    assert abs(char.chi_value(p) - char.eps_value(p) * alpha**3) < 1e-12


@pytest.mark.parametrize("D,d,k0,k1", [(7, 5, 7, 10), (7, 1, 7, 2), (23, -3, 23, 6), (8, 1, 1, 16)])
def test_factorization_moduli(D, d, k0, k1):
    fac = factor_eps(make_character(D, d))
    assert (fac.k0, fac.k1) == (k0, k1)


def test_factorization_product():
    char = make_character(11, 5)
    fac = factor_eps(char)
    for u in range(-30, 30):
        for v in range(-6, 7):
            if (u * u + 11 * v * v) % 4 == 0:
                p = LatticePoint(u, v, 11)
                assert fac.eps0(p) * fac.eps1(p) == char.eps_value(p)


def test_serialization_round_trip():
    char = make_character(24, 5)
    restored = deserialize_character(serialize_character(char))
    assert np.array_equal(restored.table, char.table)
    assert restored.d == 5
    assert restored.canonical.conductor == char.canonical.conductor


def test_serialization_rejects_unknown_fields():
    import orjson

    blob = orjson.loads(serialize_character(make_character(7)))
    blob["extra"] = 1
    with pytest.raises(SchemaError):
        deserialize_character(orjson.dumps(blob))


def test_disk_cache(tmp_path):
    char = make_character(8)
    first = cached_canonical(char.field, str(tmp_path))
    assert list(tmp_path.glob("eps_can_D8_v*.json"))
    second = cached_canonical(char.field, str(tmp_path))
    assert all(np.array_equal(a.table, b.table) for a, b in zip(first, second))


def test_flipped_table_fails_validation():
    char = make_character(7)
    table = char.table.copy()
    i = int(np.flatnonzero(table)[0])
    table[i] = -table[i]
    broken = replace(char, canonical=replace(char.canonical, table=table))
    report = validate_character(broken, seed=0, samples=100)
    assert not report.passed
