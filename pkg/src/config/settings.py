# encoding: utf-8
from typing import Literal, Tuple

from pydantic_settings import BaseSettings, SettingsConfigDict

from src.config import appconfig


class Settings(BaseSettings):
    """
    Project definitions and numeric defaults.

    Every field can be overridden through an environment variable with the
    ``HECKE_`` prefix, e.g. ``HECKE_LATTICE_SLICE=64``.
    """

    model_config = SettingsConfigDict(env_prefix="HECKE_", extra="ignore")

    PROJECT_NAME: str = "hecke-central"
    VERSION: str = "1.0.0"
    SCHEMA_VERSION: int = 1

    if appconfig.ENV == "development":
        VERBOSE: bool = True
    else:
        VERBOSE: bool = False

    tol: float = appconfig.DEFAULT_TOL
    threads: int = appconfig.DEFAULT_THREADS

    # split points for the root number solve and the extra consistency point
    afe_split_points: Tuple[float, float] = (1.0, 2.0)
    afe_check_point: float = 0.5
    root_number_slack: float = 1e-4

    # v-rows per worker task in lattice sums
    lattice_slice: int = 32

    miller_yang_method: Literal["series", "contour"] = "series"
    r1_cross_check: bool = True


def get_setting() -> Settings:
    """
    Return the settings object.

    Returns:
        Settings: populated from defaults and the environment.
    """
    return Settings()
