"""UI package for the landscape package."""

from .components import UIComponents

__all__ = [
    "UIComponents",
]
