import os
import sys
from typing import Optional, TextIO

from validation.errors import InputError


def save_report(filepath: str, text: str) -> None:
    """Write text to filepath with an atomic replace"""
    temp_filepath = filepath + ".tmp"
    try:
        with open(temp_filepath, "w", newline="") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(temp_filepath, filepath)
    except OSError as e:
        try:
            os.unlink(temp_filepath)
        except OSError:
            pass
        raise InputError(f"cannot write {filepath}: {e.strerror}") from e


def emit(text: str, filepath: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    if filepath:
        save_report(filepath, text)
        return
    stream = stream if stream is not None else sys.stdout
    stream.write(text)
    stream.flush()
