import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from stairperm.common.constants import DEFAULTS


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {value!r}")


def _env_bool(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


@dataclass(frozen=True)
class Settings:
    """
    Runtime configuration of the library.

    :param truncation_order: Default truncation order N of generating functions
    :type truncation_order: int
    :param oracle_ceiling: Largest size the brute-force oracle may be asked to enumerate
    :type oracle_ceiling: int
    :param sampler_grid_ceiling: Largest grid size whose independent sets the sampler lists exhaustively
    :type sampler_grid_ceiling: int
    :param bijection_ceiling: Largest total size accepted by the bijection lab
    :type bijection_ceiling: int
    :param verbose: Whether informational log messages are emitted
    :type verbose: bool
    """
    truncation_order: int = DEFAULTS.TRUNCATION_ORDER
    oracle_ceiling: int = DEFAULTS.ORACLE_CEILING
    sampler_grid_ceiling: int = DEFAULTS.SAMPLER_GRID_CEILING
    bijection_ceiling: int = DEFAULTS.BIJECTION_CEILING
    verbose: bool = True

    @classmethod
    def from_env(cls, dotenv_path: Optional[str] = None) -> "Settings":
        """
        Build the settings from ``STAIRPERM_*`` environment variables, reading a ``.env`` file first if present.

        :param dotenv_path: Optional explicit path of the ``.env`` file
        :type dotenv_path: Optional[str]
        :return: The settings
        :rtype: Settings
        """
        load_dotenv(dotenv_path=dotenv_path)
        return cls(
            truncation_order=_env_int("STAIRPERM_TRUNCATION_ORDER", cls.truncation_order),
            oracle_ceiling=_env_int("STAIRPERM_ORACLE_CEILING", cls.oracle_ceiling),
            sampler_grid_ceiling=_env_int("STAIRPERM_SAMPLER_GRID_CEILING", cls.sampler_grid_ceiling),
            bijection_ceiling=_env_int("STAIRPERM_BIJECTION_CEILING", cls.bijection_ceiling),
            verbose=_env_bool("STAIRPERM_VERBOSE", cls.verbose),
        )


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Return the process-wide settings, loading them from the environment on first use."""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings
