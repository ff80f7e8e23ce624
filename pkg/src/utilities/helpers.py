from datetime import datetime as dts
from pathlib import Path
from typing import Iterator, List

import orjson
import yaml

from src.config import appconfig

DEFAULTS_FILE = Path(__file__).resolve().parent.parent / "config" / "defaults.yaml"


def load_yaml_file(file_path):
    """
    Reads a YAML file and returns its contents as a Python dictionary.

    Args:
        file_path (str): The path to the YAML file.

    Returns:
        dict: The contents of the YAML file as a Python dictionary.
    """
    with open(file_path, "r") as file:
        data = yaml.safe_load(file)
    return data


def load_defaults(section: str = None) -> dict:
    data = load_yaml_file(DEFAULTS_FILE)
    return data[section] if section else data


def dump_json_line(payload: dict) -> bytes:
    """One UTF-8 JSON line; keys keep insertion order."""
    return orjson.dumps(payload) + b"\n"


def read_json_lines(path) -> Iterator[dict]:
    path = Path(path)
    if not path.exists():
        return
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield orjson.loads(line)


def ensure_cache_dir() -> Path:
    path = Path(appconfig.CACHE_DIR)
    path.mkdir(parents=True, exist_ok=True)
    return path


def run_stamp() -> str:
    return dts.now().strftime("%m-%d-%Y %H:%M:%S")


def chunked(items: List, size: int) -> Iterator[List]:
    for i in range(0, len(items), size):
        yield items[i : i + size]
