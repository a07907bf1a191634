"""Test package for the landscape package."""

__all__ = []
