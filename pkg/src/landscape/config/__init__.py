"""Configuration package for the landscape package."""

from .config import ConfigManager, config

__all__ = ["ConfigManager", "config"]
