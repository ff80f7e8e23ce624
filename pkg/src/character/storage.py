"""
Versioned JSON blobs for canonical character tables, reused across CLI runs.
"""
import base64
import logging
from pathlib import Path
from typing import Optional, Tuple

import numpy as np
import orjson

from src.arithmetic.fields import QuadraticField
from src.arithmetic.ideals import IdealZModule
from src.character.canonical import CanonicalCharacter, EpsCharacter, build_canonical
from src.config.appconfig import CACHE_DIR
from src.exceptions import SchemaError

logger = logging.getLogger(__name__)

BLOB_VERSION = 1
BLOB_FIELDS = {"version", "D", "d", "conductor", "residue_count", "nonzero", "negative", "variant_index", "variant_count"}


def _pack(bits: np.ndarray) -> str:
    return base64.b64encode(np.packbits(bits.astype(np.uint8)).tobytes()).decode("ascii")


def _unpack(text: str, count: int) -> np.ndarray:
    raw = np.frombuffer(base64.b64decode(text), dtype=np.uint8)
    return np.unpackbits(raw)[:count].astype(bool)


def serialize_character(char: EpsCharacter) -> bytes:
    canonical = char.canonical
    f = canonical.conductor
    blob = {
        "version": BLOB_VERSION,
        "D": char.field.D,
        "d": char.d,
        "conductor": [f.a, f.b, f.c],
        "residue_count": int(canonical.table.size),
        "nonzero": _pack(canonical.table != 0),
        "negative": _pack(canonical.table < 0),
        "variant_index": canonical.variant_index,
        "variant_count": canonical.variant_count,
    }
    return orjson.dumps(blob)


def deserialize_character(data: bytes, k: int = 1) -> EpsCharacter:
    blob = orjson.loads(data)
    unknown = set(blob) - BLOB_FIELDS
    if unknown or blob.get("version") != BLOB_VERSION:
        raise SchemaError(f"unsupported character blob (version {blob.get('version')}, unknown fields {sorted(unknown)})")
    field = QuadraticField(blob["D"])
    a, b, c = blob["conductor"]
    count = blob["residue_count"]
    table = np.where(_unpack(blob["negative"], count), -1, 1).astype(np.int8)
    table[~_unpack(blob["nonzero"], count)] = 0
    canonical = CanonicalCharacter(
        field, IdealZModule(field, a, b, c), table, blob["variant_index"], blob["variant_count"]
    )
    return EpsCharacter(canonical, d=blob["d"], k=k)


def _cache_path(D: int, variant: int, cache_dir: Optional[str]) -> Path:
    return Path(cache_dir or CACHE_DIR) / f"eps_can_D{D}_v{variant}.json"


def cached_canonical(field: QuadraticField, cache_dir: Optional[str] = None) -> Tuple[CanonicalCharacter, ...]:
    """Load every variant for D from disk, building and writing them on a miss."""
    first = _cache_path(field.D, 0, cache_dir)
    if first.exists():
        try:
            loaded = [deserialize_character(first.read_bytes())]
            for i in range(1, loaded[0].canonical.variant_count):
                loaded.append(deserialize_character(_cache_path(field.D, i, cache_dir).read_bytes()))
            return tuple(ch.canonical for ch in loaded)
        except (OSError, SchemaError, ValueError) as e:
            logger.warning("discarding character cache for D=%d: %s", field.D, str(e), exc_info=1)
    variants = build_canonical(field)
    first.parent.mkdir(parents=True, exist_ok=True)
    for canonical in variants:
        _cache_path(field.D, canonical.variant_index, cache_dir).write_bytes(
            serialize_character(EpsCharacter(canonical))
        )
    return variants
