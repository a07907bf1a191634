"""Utility functions for the landscape package."""

import os
from pathlib import Path
from typing import List, Optional, Sequence

READ_ENCODINGS = ("utf-8", "latin-1", "cp1252")


def read_text_file(file_path: str, encodings: Sequence[str] = READ_ENCODINGS) -> Optional[str]:
    """
    Read a text file, trying several encodings in turn.

    Args:
        file_path: File to read
        encodings: Encodings to try, in order

    Returns:
        File content with CRLF normalised to LF, or None when no encoding fits
    """
    for encoding in encodings:
        try:
            with open(file_path, "r", encoding=encoding) as file:
                content = file.read()
            return content.replace("\r\n", "\n")
        except UnicodeDecodeError:
            continue
    return None


def write_text_file(file_path: str, content: str) -> None:
    """Write UTF-8 text with LF line endings, creating parent directories."""
    parent = os.path.dirname(file_path)
    if parent:
        create_directory_if_not_exists(parent)
    with open(file_path, "w", encoding="utf-8", newline="\n") as file:
        file.write(content)


def create_directory_if_not_exists(directory_path: str) -> bool:
    """
    Create a directory if it doesn't exist.

    Args:
        directory_path: Path to the directory to create

    Returns:
        True if directory was created or already existed, False on error
    """
    try:
        Path(directory_path).mkdir(parents=True, exist_ok=True)
        return True
    except OSError:
        return False


def get_file_extension(filename: str) -> str:
    """
    Get the file extension from a filename.

    Args:
        filename: Name of the file

    Returns:
        File extension (e.g., '.cnf', '.txt')
    """
    return Path(filename).suffix.lower()


def parse_float_list(text: str) -> List[float]:
    """Comma-separated floats, e.g. "0.3,0.5,0.8"; blank items are skipped."""
    values = []
    for item in text.split(","):
        stripped = item.strip()
        if stripped:
            values.append(float(stripped))
    return values
