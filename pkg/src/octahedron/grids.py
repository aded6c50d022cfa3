"""Square tables of exact rational values.

All tables are immutable.  Values are Python ints or ``Fraction`` objects;
a ``Fraction`` with unit denominator is stored as an ``int``.  Floats are
rejected because every identity in this package is checked by equality.

Indexing is ``table[i, j]``.  Row ``i`` of the ``rows`` tuple holds the
values ``table[i, 1..n]`` (``table[i, 0..n]`` for corner grids).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, Sequence, Union

Value = Union[int, Fraction]


def exact(x) -> Value:
    """Coerce ``x`` to an exact value, rejecting floats."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        q = Fraction(x)
        return q.numerator if q.denominator == 1 else q
    if isinstance(x, str):
        q = Fraction(x.strip())
        return q.numerator if q.denominator == 1 else q
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


def is_integral(x: Value) -> bool:
    return isinstance(x, int) or x.denominator == 1


def _freeze(rows: Iterable[Iterable]) -> tuple[tuple[Value, ...], ...]:
    return tuple(tuple(exact(v) for v in row) for row in rows)


@dataclass(frozen=True)
class SquareArray:
    """An ``n x n`` table indexed from 1.

    Used for input matrices ``X``, genetic arrays ``W`` / ``s`` and any
    other plain square data.
    """

    rows: tuple[tuple[Value, ...], ...]

    def __init__(self, rows: Iterable[Iterable]):
        frozen = _freeze(rows)
        n = len(frozen)
        if n == 0:
            raise ValueError("empty array")
        if any(len(row) != n for row in frozen):
            raise ValueError("array must be square")
        object.__setattr__(self, "rows", frozen)
        self.__post_init__()

    def __post_init__(self) -> None:
        pass

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], Value]):
        return cls([[fn(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])

    @classmethod
    def zeros(cls, n: int):
        return cls([[0] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Value:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"cell {ij} outside 1..{self.n}")
        return self.rows[i - 1][j - 1]

    def cells(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                yield i, j

    def values(self) -> Iterator[Value]:
        for row in self.rows:
            yield from row

    def tolist(self) -> list[list[Value]]:
        return [list(row) for row in self.rows]

    def transpose(self):
        return type(self)(zip(*self.rows))

    def row_sums(self) -> tuple[Value, ...]:
        return tuple(sum(row) for row in self.rows)

    def column_sums(self) -> tuple[Value, ...]:
        return tuple(sum(col) for col in zip(*self.rows))

    def total(self) -> Value:
        return sum(self.values())

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values())

    def is_integral(self) -> bool:
        return all(is_integral(v) for v in self.values())


class Level1Grid(SquareArray):
    """Values ``b`` on the odd lattice ``{1, 3, ..., 2n-1}^2``.

    ``rows`` is indexed like any square array; :meth:`at` takes the odd
    pyramid coordinates instead.
    """

    def at(self, i: int, j: int) -> Value:
        if i % 2 == 0 or j % 2 == 0:
            raise IndexError(f"({i}, {j}) is not an odd lattice point")
        return self[(i + 1) // 2, (j + 1) // 2]


class PlanePartition(SquareArray):
    """Non-negative ``n x n`` table weakly decreasing along rows and columns."""

    def __post_init__(self) -> None:
        from .errors import InvalidPlanePartition

        for (i, j) in self.cells():
            v = self[i, j]
            if v < 0:
                raise InvalidPlanePartition(f"negative entry {v} at {(i, j)}")
            if i < self.n and self[i + 1, j] > v:
                raise InvalidPlanePartition(f"not decreasing below {(i, j)}")
            if j < self.n and self[i, j + 1] > v:
                raise InvalidPlanePartition(f"not decreasing right of {(i, j)}")

    def diagonal(self) -> tuple[Value, ...]:
        return tuple(self[t, t] for t in range(1, self.n + 1))


@dataclass(frozen=True)
class CornerGrid:
    """An ``(n+1) x (n+1)`` table on ``{0..n}^2``.

    The south-west boundary (row 0 and column 0) is stored explicitly.
    Tropical data vanish there and algebraic Gauss data equal 1 there;
    use :meth:`from_interior` to build either kind from the ``n x n``
    interior.
    """

    rows: tuple[tuple[Value, ...], ...]

    def __init__(self, rows: Iterable[Iterable]):
        frozen = _freeze(rows)
        size = len(frozen)
        if size < 2:
            raise ValueError("corner grid needs n >= 1")
        if any(len(row) != size for row in frozen):
            raise ValueError("corner grid must be square")
        object.__setattr__(self, "rows", frozen)

    @classmethod
    def from_interior(cls, interior: Sequence[Sequence], boundary: Value = 0):
        n = len(interior)
        rows = [[boundary] * (n + 1)]
        for row in interior:
            if len(row) != n:
                raise ValueError("interior must be square")
            rows.append([boundary, *row])
        return cls(rows)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], Value]):
        return cls([[fn(i, j) for j in range(n + 1)] for i in range(n + 1)])

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, ij: tuple[int, int]) -> Value:
        i, j = ij
        if not (0 <= i <= self.n and 0 <= j <= self.n):
            raise IndexError(f"cell {ij} outside 0..{self.n}")
        return self.rows[i][j]

    def cells(self, boundary: bool = False) -> Iterator[tuple[int, int]]:
        lo = 0 if boundary else 1
        for i in range(lo, self.n + 1):
            for j in range(lo, self.n + 1):
                yield i, j

    def interior(self) -> list[list[Value]]:
        return [list(row[1:]) for row in self.rows[1:]]

    def boundary_values(self) -> set[Value]:
        return {self[i, 0] for i in range(self.n + 1)} | {self[0, j] for j in range(self.n + 1)}

    def has_boundary(self, value: Value) -> bool:
        return self.boundary_values() == {value}

    def tolist(self) -> list[list[Value]]:
        return [list(row) for row in self.rows]

    def transpose(self) -> CornerGrid:
        return CornerGrid(zip(*self.rows))
