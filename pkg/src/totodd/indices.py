"""Totally odd index sets.

``S(N, r)`` is the set of r-tuples of odd integers >= 3 summing to N.  Every
matrix and vector in the package is indexed by such a set, always in
lexicographically decreasing order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .errors import NotAMemberError

# An odd composition is a plain tuple of ints; see is_odd_composition.
OddComposition = tuple


def is_odd_composition(c, N: int | None = None, r: int | None = None) -> bool:
    """True if every part of ``c`` is odd and >= 3 (and weight/depth match)."""
    if not all(isinstance(p, int) and p >= 3 and p % 2 == 1 for p in c):
        return False
    if N is not None and sum(c) != N:
        return False
    if r is not None and len(c) != r:
        return False
    return True


def count_S(N: int, r: int) -> int:
    """Closed-form size of S(N, r) by stars and bars."""
    if r < 1 or N < 3 * r or (N - r) % 2:
        return 0
    return comb((N - 3 * r) // 2 + r - 1, r - 1)


def _compositions(N: int, r: int):
    # lex-decreasing: largest first part first
    if r == 1:
        if N >= 3 and N % 2 == 1:
            yield (N,)
        return
    top = N - 3 * (r - 1)
    for first in range(top if top % 2 else top - 1, 2, -2):
        for rest in _compositions(N - first, r - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class IndexTable:
    """The ordered index set S(N, r) with its inverse position map."""

    N: int
    r: int
    entries: tuple
    position: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __contains__(self, c) -> bool:
        return tuple(c) in self.position

    def to_json(self) -> str:
        return json.dumps(
            {"N": self.N, "r": self.r, "entries": [list(c) for c in self.entries]}
        )

    @classmethod
    def from_json(cls, text: str) -> "IndexTable":
        data = json.loads(text)
        table = enumerate_S(data["N"], data["r"])
        if [list(c) for c in table.entries] != data["entries"]:
            raise ValueError("entries do not match S(%d, %d)" % (data["N"], data["r"]))
        return table


@lru_cache(maxsize=None)
def enumerate_S(N: int, r: int) -> IndexTable:
    """All totally odd compositions of N into r parts, lex-decreasing.

    >>> enumerate_S(12, 2).entries
    ((9, 3), (7, 5), (5, 7), (3, 9))
    >>> enumerate_S(10, 3).entries
    ()
    """
    if N < 0 or r < 1:
        raise ValueError("need N >= 0 and r >= 1, got N=%r, r=%r" % (N, r))
    entries = tuple(_compositions(N, r))
    return IndexTable(N, r, entries, {c: i for i, c in enumerate(entries)})


def position_of(table: IndexTable, c) -> int:
    """Zero-based position of ``c`` in ``table``."""
    try:
        return table.position[tuple(c)]
    except KeyError:
        raise NotAMemberError("%r is not in S(%d, %d)" % (tuple(c), table.N, table.r)) from None
