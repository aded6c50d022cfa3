"""Geometry of the pyramid lattice and elementary octahedra.

The pyramid ``ABCDE`` has base vertices ``A=(0,0,0)``, ``B=(2n,0,0)``,
``C=(0,2n,0)``, ``D=(2n,2n,0)`` and apex ``E=(n,n,n)``.  Its lattice
consists of the integer points ``(i, j, k)`` with ``k <= i, j <= 2n-k``
and ``i = j = k (mod 2)``.  An elementary octahedron is centred at a
point ``(i, j, k)`` with ``0 < k < n`` and ``i = j = k+1 (mod 2)``; its six
vertices are ``(i+-1, j+-1, k)`` and ``(i, j, k+-1)``.

Values on the lattice are held by :class:`Pyramid`, shared by the
algebraic and tropical halves of the package.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple

from .grids import CornerGrid, Value, exact


class PyramidPoint(NamedTuple):
    i: int
    j: int
    k: int


class OctahedronCenter(NamedTuple):
    i: int
    j: int
    k: int

    @property
    def low(self) -> PyramidPoint:
        """Near end of the diagonal along the propagation vector (2,2,0)."""
        return PyramidPoint(self.i - 1, self.j - 1, self.k)

    @property
    def high(self) -> PyramidPoint:
        return PyramidPoint(self.i + 1, self.j + 1, self.k)

    @property
    def left(self) -> PyramidPoint:
        return PyramidPoint(self.i - 1, self.j + 1, self.k)

    @property
    def right(self) -> PyramidPoint:
        return PyramidPoint(self.i + 1, self.j - 1, self.k)

    @property
    def below(self) -> PyramidPoint:
        return PyramidPoint(self.i, self.j, self.k - 1)

    @property
    def above(self) -> PyramidPoint:
        return PyramidPoint(self.i, self.j, self.k + 1)

    def vertices(self) -> tuple[PyramidPoint, ...]:
        return (self.low, self.high, self.left, self.right, self.below, self.above)


def _check_size(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"pyramid size must be a positive integer, got {n!r}")


def is_point(n: int, p: Iterable[int]) -> bool:
    i, j, k = p
    return (
        0 <= k <= n
        and k <= i <= 2 * n - k
        and k <= j <= 2 * n - k
        and (i - k) % 2 == 0
        and (j - k) % 2 == 0
    )


def is_center(n: int, c: Iterable[int]) -> bool:
    i, j, k = c
    return (
        0 < k < n
        and k <= i <= 2 * n - k
        and k <= j <= 2 * n - k
        and (i - k) % 2 == 1
        and (j - k) % 2 == 1
    )


@lru_cache(maxsize=None)
def enumerate_points(n: int) -> tuple[PyramidPoint, ...]:
    """All lattice points, ordered by level, then ``i``, then ``j``."""
    _check_size(n)
    return tuple(
        PyramidPoint(i, j, k)
        for k in range(n + 1)
        for i in range(k, 2 * n - k + 1, 2)
        for j in range(k, 2 * n - k + 1, 2)
    )


@lru_cache(maxsize=None)
def enumerate_centers(n: int) -> tuple[OctahedronCenter, ...]:
    _check_size(n)
    return tuple(
        OctahedronCenter(i, j, k)
        for k in range(1, n)
        for i in range(k + 1, 2 * n - k, 2)
        for j in range(k + 1, 2 * n - k, 2)
    )


def _check_grid_index(n: int, i: int, j: int) -> None:
    _check_size(n)
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"grid index {(i, j)} outside 0..{n}")


def alpha(n: int, i: int, j: int) -> PyramidPoint:
    """Embed the grid cell ``(i, j)`` into the faces ABE and ACE."""
    _check_grid_index(n, i, j)
    m = min(i, j)
    return PyramidPoint(2 * i - m, 2 * j - m, m)


def beta(n: int, i: int, j: int) -> PyramidPoint:
    """Embed the grid cell ``(i, j)`` into the faces DBE and DCE."""
    _check_grid_index(n, i, j)
    m = min(i, j)
    return PyramidPoint(2 * n - 2 * i + m, 2 * n - 2 * j + m, m)


def on_alpha_faces(n: int, p: Iterable[int]) -> bool:
    i, j, k = p
    return k == 0 or i == k or j == k


def on_beta_faces(n: int, p: Iterable[int]) -> bool:
    i, j, k = p
    return k == 0 or i == 2 * n - k or j == 2 * n - k


@lru_cache(maxsize=None)
def wavefront_order(n: int, direction: str = "forward") -> tuple[tuple[OctahedronCenter, PyramidPoint], ...]:
    """Schedule for filling the pyramid from one pair of faces.

    ``forward`` starts from the base plus faces ABE, ACE and solves each
    octahedron for its vertex ``(i+1, j+1, k)``; ``backward`` starts from
    the base plus DBE, DCE and solves for ``(i-1, j-1, k)``.  Steps are
    sorted by ``(i+j, i, k)`` of the solved vertex, ascending for forward
    and descending for backward, so every step only reads earlier values.
    """
    _check_size(n)
    if direction == "forward":
        steps = [
            (OctahedronCenter(p.i - 1, p.j - 1, p.k), p)
            for p in enumerate_points(n)
            if not on_alpha_faces(n, p)
        ]
        steps.sort(key=lambda step: (step[1].i + step[1].j, step[1].i, step[1].k))
    elif direction == "backward":
        steps = [
            (OctahedronCenter(p.i + 1, p.j + 1, p.k), p)
            for p in enumerate_points(n)
            if not on_beta_faces(n, p)
        ]
        steps.sort(key=lambda step: (step[1].i + step[1].j, step[1].i, step[1].k), reverse=True)
    else:
        raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")
    return tuple(steps)


class Pyramid:
    """A function on the pyramid lattice with exact values.

    ``polarized`` records that the producer guarantees the octahedron
    relation of its semiring; it is informational and never trusted by
    the predicates.
    """

    __slots__ = ("n", "_values", "polarized")

    def __init__(self, n: int, values: Mapping[tuple[int, int, int], Value], polarized: bool = False):
        _check_size(n)
        pts = enumerate_points(n)
        if len(values) != len(pts):
            raise ValueError(f"expected {len(pts)} values for n={n}, got {len(values)}")
        self.n = n
        self._values = {p: exact(values[p]) for p in pts}
        self.polarized = polarized

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int, int], Value], polarized: bool = False) -> Pyramid:
        return cls(n, {p: fn(*p) for p in enumerate_points(n)}, polarized)

    @classmethod
    def from_levels(cls, levels) -> Pyramid:
        """Inverse of :meth:`levels`."""
        n = len(levels) - 1
        values = {}
        for k, level in enumerate(levels):
            if len(level) != n - k + 1 or any(len(row) != n - k + 1 for row in level):
                raise ValueError(f"level {k} must be {n - k + 1}x{n - k + 1}")
            for a, row in enumerate(level):
                for b, v in enumerate(row):
                    values[(k + 2 * a, k + 2 * b, k)] = v
        return cls(n, values)

    def __getitem__(self, p) -> Value:
        return self._values[tuple(p)]

    def __contains__(self, p) -> bool:
        return tuple(p) in self._values

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pyramid):
            return NotImplemented
        return self.n == other.n and self._values == other._values

    def __hash__(self):
        return hash((self.n, frozenset(self._values.items())))

    def __repr__(self) -> str:
        return f"Pyramid(n={self.n}, apex={self.apex})"

    def items(self) -> Iterator[tuple[PyramidPoint, Value]]:
        return iter(self._values.items())

    def values(self) -> Iterator[Value]:
        return iter(self._values.values())

    @property
    def apex(self) -> Value:
        return self[(self.n, self.n, self.n)]

    def level(self, k: int) -> list[list[Value]]:
        """Values at level ``k`` as rows indexed by ``i``, columns by ``j``."""
        lo, hi = k, 2 * self.n - k
        return [[self[(i, j, k)] for j in range(lo, hi + 1, 2)] for i in range(lo, hi + 1, 2)]

    def levels(self) -> list[list[list[Value]]]:
        return [self.level(k) for k in range(self.n + 1)]

    def pullback(self, embedding: Callable[[int, int, int], PyramidPoint]) -> CornerGrid:
        return CornerGrid.from_function(self.n, lambda i, j: self[embedding(self.n, i, j)])

    def map(self, fn: Callable[[Value], Value]) -> Pyramid:
        return Pyramid(self.n, {p: fn(v) for p, v in self._values.items()})


def fill(
    n: int,
    seeds: Mapping[PyramidPoint, Value],
    direction: str,
    solve: Callable[[OctahedronCenter, Mapping[PyramidPoint, Value]], Value],
) -> dict[PyramidPoint, Value]:
    """Extend ``seeds`` (the initial faces) to the whole lattice.

    ``solve(center, values)`` returns the value of the single unknown
    vertex of ``center`` given the values filled so far.
    """
    values = dict(seeds)
    for center, unknown in wavefront_order(n, direction):
        values[unknown] = solve(center, values)
    return values


def face_seeds(n: int, grid: CornerGrid, direction: str, base: Value) -> dict[PyramidPoint, Value]:
    """Initial values for :func:`fill`: the base plus the grid on its faces."""
    if grid.n != n:
        raise ValueError("grid size does not match pyramid size")
    embed = alpha if direction == "forward" else beta
    seeds = {PyramidPoint(i, j, 0): base for i in range(0, 2 * n + 1, 2) for j in range(0, 2 * n + 1, 2)}
    for i, j in grid.cells(boundary=True):
        p = embed(n, i, j)
        if p.k == 0 and grid[i, j] != base:
            raise ValueError(f"grid boundary value at {(i, j)} must be {base}, got {grid[i, j]}")
        seeds[p] = grid[i, j]
    return seeds
