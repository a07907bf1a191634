"""Configuration management for the landscape package."""

import os
from pathlib import Path
from typing import Dict, Optional

from dotenv import load_dotenv

from landscape.constants import (
    CONFIG_PATH_TEMPLATE,
    DEFAULT_CHUNK_SIZE,
    DEFAULT_LOG_LEVEL,
    DEFAULT_MAX_CYCLE_LEN,
    DEFAULT_ORACLE_CAP,
    DEFAULT_THREADS,
    ENV_CHUNK_SIZE,
    ENV_LOG_LEVEL,
    ENV_MAX_CYCLE_LEN,
    ENV_ORACLE_CAP,
    ENV_THREADS,
)
from landscape.exceptions import ConfigurationError


class ConfigManager:
    """Manages application configuration from environment variables."""

    def __init__(self) -> None:
        """Initialize the configuration manager."""
        self.config_file_loaded = self._load_environment()

    def _load_environment(self) -> bool:
        """
        Load environment variables from the standardized config path.

        Configuration loading order:
        1. ~/.config/landscape/.env (standardized location)
        2. System environment variables only

        Returns:
            True if .env file was found and loaded, False otherwise
        """
        expanded_path = os.path.expanduser(CONFIG_PATH_TEMPLATE)
        config_path = Path(expanded_path)
        if config_path.exists():
            load_dotenv(config_path)
            return True
        return False

    def get_config_value(self, key: str, default: Optional[str] = None) -> Optional[str]:
        """Get configuration value with fallback."""
        config_value = os.getenv(key, default)
        return config_value

    def get_int_config_value(self, key: str, default: Optional[int] = None) -> int:
        """Get integer configuration value with fallback."""
        default_string = str(default) if default is not None else None
        value = self.get_config_value(key, default_string)
        if value is None or value.strip() == "":
            return default if default is not None else 0
        try:
            int_value = int(value)
            return int_value
        except ValueError as e:
            error_message = "Invalid integer value for %s: %s" % (key, value)
            raise ConfigurationError(error_message, key) from e

    def get_float_config_value(self, key: str, default: Optional[float] = None) -> float:
        """Get float configuration value with fallback."""
        default_string = str(default) if default is not None else None
        value = self.get_config_value(key, default_string)
        if value is None or value.strip() == "":
            return default if default is not None else 0.0
        try:
            float_value = float(value)
            return float_value
        except ValueError as e:
            error_message = "Invalid float value for %s: %s" % (key, value)
            raise ConfigurationError(error_message, key) from e

    def get_threads(self) -> int:
        """Worker cap for simulation campaigns, never below one."""
        threads = self.get_int_config_value(ENV_THREADS, DEFAULT_THREADS)
        return max(1, threads)

    def get_oracle_cap(self) -> int:
        """Largest number of loci the brute-force oracle may enumerate."""
        cap = self.get_int_config_value(ENV_ORACLE_CAP, DEFAULT_ORACLE_CAP)
        if cap < 1:
            error_message = "%s must be positive, got %d" % (ENV_ORACLE_CAP, cap)
            raise ConfigurationError(error_message, ENV_ORACLE_CAP)
        return cap

    def get_max_cycle_len(self) -> int:
        """Default truncation length of the cycle census."""
        max_len = self.get_int_config_value(ENV_MAX_CYCLE_LEN, DEFAULT_MAX_CYCLE_LEN)
        if max_len < 2:
            error_message = "%s must be at least 2, got %d" % (ENV_MAX_CYCLE_LEN, max_len)
            raise ConfigurationError(error_message, ENV_MAX_CYCLE_LEN)
        return max_len

    def get_chunk_size(self) -> int:
        """Number of trials handed to one worker task."""
        chunk_size = self.get_int_config_value(ENV_CHUNK_SIZE, DEFAULT_CHUNK_SIZE)
        return max(1, chunk_size)

    def get_log_level(self) -> str:
        """Log level name for the command-line interface."""
        level = self.get_config_value(ENV_LOG_LEVEL, DEFAULT_LOG_LEVEL) or DEFAULT_LOG_LEVEL
        return level.upper()

    def describe(self) -> Dict[str, str]:
        """Recognised variables mapped to their raw values ("" when unset)."""
        keys = [ENV_THREADS, ENV_ORACLE_CAP, ENV_MAX_CYCLE_LEN, ENV_CHUNK_SIZE, ENV_LOG_LEVEL]
        return {key: os.environ.get(key, "") for key in keys}


# Global configuration instance
config = ConfigManager()
