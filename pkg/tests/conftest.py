"""Shared fixtures: the triangle rows up to 500 and a set-partition oracle."""

from __future__ import annotations

from functools import lru_cache

import pytest

from morganvoyce import row_closed_form


@pytest.fixture(scope="session")
def rows500():
    """rows500[n] = closed-form row n for n = 1..500 (index 0 unused)."""
    return [None] + [row_closed_form(n) for n in range(1, 501)]


@pytest.fixture(scope="session")
def set_partition_counts():
    """Brute-force partition counter: counts(n)[k] = number of ways to split
    an n-set into exactly k blocks, by exhaustive enumeration of restricted
    growth strings (element i joins an existing block or opens a new one).
    Independent of any closed form; cached per session."""

    @lru_cache(maxsize=None)
    def counts(n: int):
        tally = [0] * (n + 1)

        def grow(pos: int, nblocks: int) -> None:
            if pos == n:
                tally[nblocks] += 1
                return
            for _ in range(nblocks):
                grow(pos + 1, nblocks)
            grow(pos + 1, nblocks + 1)

        if n == 0:
            tally[0] = 1
        else:
            grow(0, 0)
        return tuple(tally)

    return counts
