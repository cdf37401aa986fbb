"""
Configuration settings for the hyperspace toolkit.
"""
import os
from typing import Optional, Union

from dotenv import load_dotenv

from src.exceptions.base_exceptions import ConfigurationError

# Load environment variables from .env file
load_dotenv()


def _env_int(name: str, default: int) -> Union[int, str]:
    """Integer environment value; unparsable text is kept for validation to report."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        return raw


class Settings:
    """Application settings loaded from environment variables."""

    # Application Configuration
    DEBUG: bool = os.getenv("DEBUG", "False").lower() == "true"
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # File logging stays off unless a path is given
    LOG_FILE_PATH: Optional[str] = os.getenv("LOG_FILE_PATH") or None
    LOG_MAX_SIZE: Union[int, str] = _env_int("LOG_MAX_SIZE", 10 * 1024 * 1024)
    LOG_BACKUP_COUNT: Union[int, str] = _env_int("LOG_BACKUP_COUNT", 5)

    # Complex construction
    COMPLEX_CELL_CAP: Union[int, str] = _env_int("COMPLEX_CELL_CAP", 1000000)

    # Sweep Configuration
    PAIR_SWEEP_MAX_EDGES: Union[int, str] = _env_int("PAIR_SWEEP_MAX_EDGES", 8)
    TREE_SWEEP_MAX_EDGES: Union[int, str] = _env_int("TREE_SWEEP_MAX_EDGES", 9)
    SWEEP_JOBS: Union[int, str] = _env_int("SWEEP_JOBS", 1)

    @classmethod
    def validate_required_settings(cls) -> None:
        """
        Validate that numeric settings are inside their usable ranges.

        Raises:
            ConfigurationError: naming the first key that is not an integer
                or falls below its minimum
        """
        bounded_settings = [
            ("LOG_MAX_SIZE", cls.LOG_MAX_SIZE, 1),
            ("LOG_BACKUP_COUNT", cls.LOG_BACKUP_COUNT, 0),
            ("COMPLEX_CELL_CAP", cls.COMPLEX_CELL_CAP, 1),
            ("PAIR_SWEEP_MAX_EDGES", cls.PAIR_SWEEP_MAX_EDGES, 1),
            ("TREE_SWEEP_MAX_EDGES", cls.TREE_SWEEP_MAX_EDGES, 1),
            ("SWEEP_JOBS", cls.SWEEP_JOBS, 1),
        ]

        for setting_name, setting_value, minimum in bounded_settings:
            if not isinstance(setting_value, int) or setting_value < minimum:
                raise ConfigurationError(
                    f"{setting_name} must be an integer >= {minimum}, got {setting_value!r}",
                    config_key=setting_name,
                )


# Global settings instance
settings = Settings()
