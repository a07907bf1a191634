"""Utility functions for the landscape package."""

from .helpers import (
    create_directory_if_not_exists,
    get_file_extension,
    parse_float_list,
    read_text_file,
    write_text_file,
)

__all__ = [
    "read_text_file",
    "write_text_file",
    "create_directory_if_not_exists",
    "get_file_extension",
    "parse_float_list",
]
