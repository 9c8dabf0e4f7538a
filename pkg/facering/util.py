from __future__ import annotations

import hashlib
import pathlib
from typing import List

from .typing import AnyPath

COMPLEX_SUFFIX = ".cplx"


def get_file_sha256(filename: AnyPath) -> str:
    """Hash a file's contents with the SHA-256 algorithm."""
    with open(filename, "rb") as fp:
        return hashlib.sha256(fp.read()).hexdigest()


def find_complex_files(directory: AnyPath) -> List[pathlib.Path]:
    """``.cplx`` files directly inside ``directory``, sorted by name."""
    return sorted(
        path for path in pathlib.Path(directory).iterdir()
        if path.is_file() and path.suffix == COMPLEX_SUFFIX
    )
