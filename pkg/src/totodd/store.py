"""Text matrix files and the on-disk matrix cache.

File layout::

    totodd-matrix v1
    <kind> <N> <r> [<j>]
    <rows> <cols>
    <row 0 as space-separated decimal integers>
    ...
    sha256 <hex digest of everything above>

Writes go to a temporary file in the cache directory and are renamed into
place, so concurrent builders never see partial files.
"""
from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path

from .indices import enumerate_S
from .linalg import ExactMatrix
from .matrices import build

MAGIC = "totodd-matrix v1"
CACHE_ENV = "TOTODD_CACHE"


class MatrixFileError(ValueError):
    pass


def _digest(body: str) -> str:
    return hashlib.sha256(body.encode("ascii")).hexdigest()


def format_matrix(m: ExactMatrix, kind: str, N: int, r: int, j: int | None = None) -> str:
    tag = " ".join(str(x) for x in ((kind, N, r) if j is None else (kind, N, r, j)))
    lines = [MAGIC, tag, "%d %d" % (m.rows, m.cols)]
    lines.extend(" ".join(str(x) for x in row) for row in m.entries)
    body = "\n".join(lines) + "\n"
    return body + "sha256 %s\n" % _digest(body)


def parse_matrix(text: str):
    """Inverse of :func:`format_matrix`; returns ``(matrix, (kind, N, r, j))``."""
    lines = text.split("\n")
    if not lines or lines[0] != MAGIC:
        raise MatrixFileError("not a %s file" % MAGIC)
    try:
        tag = lines[1].split()
        kind, N, r = tag[0], int(tag[1]), int(tag[2])
        j = int(tag[3]) if len(tag) > 3 else None
        nrows, ncols = (int(x) for x in lines[2].split())
    except (IndexError, ValueError) as exc:
        raise MatrixFileError("malformed header") from exc
    row_lines = lines[3:3 + nrows]
    if len(row_lines) != nrows:
        raise MatrixFileError("truncated matrix body")
    rows = [[int(x) for x in line.split()] for line in row_lines]
    if any(len(row) != ncols for row in rows):
        raise MatrixFileError("row length does not match column count")
    trailer = lines[3 + nrows] if len(lines) > 3 + nrows else ""
    if not trailer:
        raise MatrixFileError("missing checksum trailer")
    body = "\n".join(lines[:3 + nrows]) + "\n"
    fields = trailer.split()
    if len(fields) != 2 or fields[0] != "sha256" or fields[1] != _digest(body):
        raise MatrixFileError("checksum mismatch")
    return ExactMatrix.from_rows(rows, ncols), (kind, N, r, j)


def checksum_of(text: str) -> str:
    return text.rstrip("\n").rsplit(" ", 1)[-1]


def default_cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, "cache"))


class MatrixStore:
    """Directory of cached matrices keyed by (kind, N, r, j)."""

    def __init__(self, cache_dir=None):
        self.cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()

    def path_for(self, kind: str, N: int, r: int, j: int | None = None) -> Path:
        name = "%s_%d_%d" % (kind, N, r) if j is None else "%s_%d_%d_%d" % (kind, N, r, j)
        return self.cache_dir / (name + ".mat")

    def write(self, m: ExactMatrix, kind: str, N: int, r: int, j: int | None = None) -> Path:
        path = self.path_for(kind, N, r, j)
        path.parent.mkdir(parents=True, exist_ok=True)
        text = format_matrix(m, kind, N, r, j)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path

    def load(self, kind: str, N: int, r: int, j: int | None = None):
        """Cached matrix or None when absent or corrupt."""
        path = self.path_for(kind, N, r, j)
        try:
            text = path.read_text(encoding="ascii")
            m, key = parse_matrix(text)
        except (OSError, MatrixFileError):
            return None
        if key != (kind, N, r, j):
            return None
        table = enumerate_S(N, r)
        if m.shape != (len(table), len(table)):
            return None
        return ExactMatrix(m.rows, m.cols, m.entries, table, table)

    def get(self, kind: str, N: int, r: int, j: int | None = None):
        """Return ``(matrix, path, cache_hit)``, building and caching on a miss."""
        m = self.load(kind, N, r, j)
        if m is not None:
            return m, self.path_for(kind, N, r, j), True
        m = build(kind, N, r, j)
        return m, self.write(m, kind, N, r, j), False
