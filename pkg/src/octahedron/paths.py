"""Monotone lattice paths and vertex-disjoint path families.

A path from column ``a`` to row ``b`` starts at node ``(a, 1)``, ends at
``(1, b)`` and moves by ``(0, 1)`` or ``(-1, 0)``.  The pyramid point
``(i, j, k)`` selects the family of ``k`` paths from columns
``(i-k)/2 + t`` to rows ``(j-k)/2 + t``, ``t = 1..k``; only families with
no shared node count.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple


class LatticePath(NamedTuple):
    nodes: tuple[tuple[int, int], ...]
    nodeset: frozenset

    @property
    def start(self) -> tuple[int, int]:
        return self.nodes[0]

    @property
    def end(self) -> tuple[int, int]:
        return self.nodes[-1]


@lru_cache(maxsize=None)
def paths(column: int, row: int) -> tuple[LatticePath, ...]:
    """Every path from ``column`` to ``row``."""
    if column < 1 or row < 1:
        raise ValueError("path endpoints are 1-based")
    out = []

    def walk(a, b, trail):
        trail.append((a, b))
        if (a, b) == (1, row):
            out.append(LatticePath(tuple(trail), frozenset(trail)))
        else:
            if b < row:
                walk(a, b + 1, trail)
            if a > 1:
                walk(a - 1, b, trail)
        trail.pop()

    walk(column, 1, [])
    return tuple(out)


def endpoints(i: int, j: int, k: int) -> list[tuple[int, int]]:
    """(column, row) pairs of the family attached to pyramid point (i, j, k)."""
    c0, r0 = (i - k) // 2, (j - k) // 2
    return [(c0 + t, r0 + t) for t in range(1, k + 1)]


def disjoint_families(i: int, j: int, k: int) -> Iterator[tuple[LatticePath, ...]]:
    """All vertex-disjoint families for the pyramid point ``(i, j, k)``."""
    ends = endpoints(i, j, k)

    def extend(t, used, chosen):
        if t == len(ends):
            yield tuple(chosen)
            return
        for path in paths(*ends[t]):
            if used.isdisjoint(path.nodeset):
                chosen.append(path)
                yield from extend(t + 1, used | path.nodeset, chosen)
                chosen.pop()

    yield from extend(0, frozenset(), [])
