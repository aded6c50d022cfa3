"""Plane partitions, tableau pairs and the octahedron RSK correspondence.

The chain is ``s -> g = integrate(s) -> h = or_map(g) -> p = diagonal_difference(h)``.
The plane partition ``p`` is cut along its main diagonal; each triangle,
read diagonal by diagonal, is a chain of interlacing partitions, i.e. a
semi-standard Young tableau.

Sides are named by the triangle of ``p`` they come from:

``lower``
    entries ``p(i, j)`` with ``i > j``; diagonal ``t`` is
    ``(p(1+t, 1), p(2+t, 2), ...)``.  Its half of ``h`` lives on face DCE.
``upper``
    entries with ``i < j``; diagonal ``t`` is ``(p(1, 1+t), p(2, 2+t), ...)``.
    Its half of ``h`` lives on face DBE.

With rows of ``s`` indexed by the first coordinate, the lower tableau has
the row sums of ``s`` as content and the upper tableau the column sums.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import (
    InvalidTableau,
    NegativeCorner,
    NegativeEntries,
    NonIntegerEntries,
    NotInframodular,
    ShapeMismatch,
)
from .grids import CornerGrid, PlanePartition, SquareArray
from .tropical import differentiate, inframodular_violations, integrate, or_map, or_map_inverse

SIDES = ("lower", "upper")


@dataclass(frozen=True)
class Tableau:
    """A semi-standard Young tableau on the alphabet ``1..n``.

    Stored as the chain ``chain[t]`` = shape of the entries ``<= n - t``,
    each a partition padded to ``n`` parts, so ``chain[0]`` is the shape
    and ``chain[n]`` is empty.
    """

    chain: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        chain = tuple(tuple(int(x) for x in lam) for lam in self.chain)
        object.__setattr__(self, "chain", chain)
        n = len(chain) - 1
        if n < 1:
            raise InvalidTableau("chain must hold n + 1 partitions")
        if any(len(lam) != n for lam in chain):
            raise InvalidTableau(f"every partition must have {n} parts")
        if any(chain[n]):
            raise InvalidTableau("last partition of the chain must be empty")
        for t, lam in enumerate(chain):
            if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
                raise InvalidTableau(f"chain[{t}] = {lam} is not a partition")
            if t and not interlace(chain[t - 1], lam):
                raise InvalidTableau(f"chain[{t - 1}] and chain[{t}] do not interlace")

    @property
    def n(self) -> int:
        return len(self.chain) - 1

    @property
    def shape(self) -> tuple[int, ...]:
        return self.chain[0]

    @property
    def size(self) -> int:
        return sum(self.shape)

    def rows(self) -> list[list[int]]:
        """Row filling: rows weakly increase, columns strictly increase."""
        n = self.n
        out = [[] for _ in range(n)]
        for t in range(n - 1, -1, -1):
            letter = n - t
            for r, (outer, inner) in enumerate(zip(self.chain[t], self.chain[t + 1])):
                out[r].extend([letter] * (outer - inner))
        return [row for row in out if row]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int) -> Tableau:
        rows = [list(r) for r in rows if len(r)]
        if len(rows) > n:
            raise InvalidTableau(f"{len(rows)} rows cannot be filled from an alphabet of size {n}")
        for r, row in enumerate(rows):
            if any(not 1 <= x <= n for x in row):
                raise InvalidTableau(f"row {r + 1} has letters outside 1..{n}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise InvalidTableau(f"row {r + 1} is not weakly increasing")
            if r and (len(row) > len(rows[r - 1]) or any(row[c] <= rows[r - 1][c] for c in range(len(row)))):
                raise InvalidTableau(f"columns are not strictly increasing at row {r + 1}")
        chain = []
        for t in range(n + 1):
            bound = n - t
            lam = [bisect_right(row, bound) for row in rows]
            chain.append(tuple(lam + [0] * (n - len(lam))))
        return cls(tuple(chain))

    @classmethod
    def empty(cls, n: int) -> Tableau:
        return cls(tuple((0,) * n for _ in range(n + 1)))

    def content(self) -> tuple[int, ...]:
        """Multiplicities of the letters ``1..n``."""
        n = self.n
        return tuple(sum(self.chain[n - m]) - sum(self.chain[n - m + 1]) for m in range(1, n + 1))

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows())


def interlace(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...`` (equal length sequences)."""
    return all(lam[r] >= mu[r] for r in range(len(mu))) and all(
        mu[r] >= lam[r + 1] for r in range(len(lam) - 1)
    )


def diagonal_difference(h: CornerGrid) -> PlanePartition:
    """``p(i, j) = h(i, j) - h(i-1, j-1)`` for an inframodular boundary function."""
    if not h.has_boundary(0):
        raise ValueError("h must vanish on the south-west boundary")
    bad = next(inframodular_violations(h), None)
    if bad is not None:
        raise NotInframodular(f"{bad[0]}-break at {bad[1:]}")
    n = h.n
    if h[n, n] < h[n - 1, n - 1]:
        raise NegativeCorner(f"h({n},{n}) = {h[n, n]} < h({n - 1},{n - 1}) = {h[n - 1, n - 1]}")
    return PlanePartition.from_function(n, lambda i, j: h[i, j] - h[i - 1, j - 1])


def diagonal_sum(p: PlanePartition) -> CornerGrid:
    """``h(i, j) = p(i, j) + p(i-1, j-1) + ...``; inverse of :func:`diagonal_difference`."""
    if not isinstance(p, PlanePartition):
        p = PlanePartition(p.rows)
    n = p.n
    h = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            h[i][j] = p[i, j] + h[i - 1][j - 1]
    return CornerGrid(h)


def shape(p: PlanePartition) -> tuple:
    return p.diagonal()


def _diagonal(p: PlanePartition, side: str, t: int) -> tuple[int, ...]:
    n = p.n
    if side == "lower":
        lam = [p[r + t, r] for r in range(1, n - t + 1)]
    elif side == "upper":
        lam = [p[r, r + t] for r in range(1, n - t + 1)]
    else:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    return tuple(lam) + (0,) * t


def half_tableau(p: PlanePartition, side: str) -> Tableau:
    """The tableau encoded by one triangle of ``p``."""
    if not p.is_integral():
        raise NonIntegerEntries("tableaux need an integer plane partition")
    return Tableau(tuple(_diagonal(p, side, t) for t in range(p.n)) + ((0,) * p.n,))


def plane_partition_from_tableaux(lower: Tableau, upper: Tableau) -> PlanePartition:
    if lower.n != upper.n:
        raise ShapeMismatch(f"alphabets differ: {lower.n} vs {upper.n}")
    if lower.shape != upper.shape:
        raise ShapeMismatch(f"shapes differ: {lower.shape} vs {upper.shape}")

    def entry(i, j):
        if i >= j:
            return lower.chain[i - j][j - 1]
        return upper.chain[j - i][i - 1]

    return PlanePartition.from_function(lower.n, entry)


class RSKResult(NamedTuple):
    plane_partition: PlanePartition
    lower: Tableau
    upper: Tableau


def octahedron_plane_partition(s: SquareArray) -> PlanePartition:
    """``diagonal_difference(or_map(integrate(s)))`` for a non-negative array."""
    if not s.is_nonnegative():
        raise NegativeEntries("array must be non-negative")
    return diagonal_difference(or_map(integrate(s)))


def rsk_forward(s: SquareArray) -> RSKResult:
    """Octahedron RSK: non-negative integer array to plane partition and tableau pair."""
    if not s.is_integral():
        raise NonIntegerEntries("array must have integer entries")
    p = octahedron_plane_partition(s)
    return RSKResult(p, half_tableau(p, "lower"), half_tableau(p, "upper"))


def rsk_inverse(p: PlanePartition) -> SquareArray:
    if not isinstance(p, PlanePartition):
        p = PlanePartition(p.rows)
    return differentiate(or_map_inverse(diagonal_sum(p)))


def rsk_inverse_tableaux(lower: Tableau, upper: Tableau) -> SquareArray:
    return rsk_inverse(plane_partition_from_tableaux(lower, upper))


# classical bumping RSK, used as an independent cross-check


def row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Knuth row insertion of ``x`` in place; returns the (row, column) of the new cell."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        c = bisect_right(row, x)
        if c == len(row):
            row.append(x)
            return r, c
        row[c], x = x, row[c]
        r += 1


def biword(s: SquareArray) -> list[tuple[int, int]]:
    """Pairs ``(a, b)`` repeated ``s(a, b)`` times, in lexicographic order."""
    if not s.is_integral():
        raise NonIntegerEntries("array must have integer entries")
    if not s.is_nonnegative():
        raise NegativeEntries("array must be non-negative")
    return [(a, b) for a, b in s.cells() for _ in range(int(s[a, b]))]


def classical_rsk(s: SquareArray) -> tuple[Tableau, Tableau]:
    """Bumping RSK on the biword of ``s``: (insertion tableau P, recording tableau Q).

    ``P`` collects the column indices, ``Q`` records the row indices.
    """
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for a, b in biword(s):
        r, c = row_insert(P, b)
        if r == len(Q):
            Q.append([])
        Q[r].append(a)
    return Tableau.from_rows(P, s.n), Tableau.from_rows(Q, s.n)


def reading_word(T: Tableau) -> list[int]:
    """Rows from the bottom up, each read left to right."""
    return [x for row in reversed(T.rows()) for x in row]


def evacuation(T: Tableau) -> Tableau:
    """Schuetzenberger involution.

    Rotating ``T`` by 180 degrees and complementing letters ``x -> n+1-x``
    gives a skew tableau; its rectification, computed by inserting its
    reading word, is the evacuation of ``T``.
    """
    n = T.n
    word = [n + 1 - x for x in reversed(reading_word(T))]
    rows: list[list[int]] = []
    for x in word:
        row_insert(rows, x)
    return Tableau.from_rows(rows, n)


def matrix_reading(s: SquareArray) -> SquareArray:
    """``s`` as an ordinary matrix, top row first.

    Documents list row 1 first, but the paths behind the octahedron map
    run from ``(i, 1)`` to ``(1, j)``; they become the north-west to
    south-east chains of classical RSK once row ``n`` is put on top.
    """
    return SquareArray(s.rows[::-1])


TRANSFORMS = {"identity": lambda T: T, "evacuation": evacuation}


def reconciling_pairings(s: SquareArray) -> set[tuple[str, str]]:
    """Transforms ``(for upper, for lower)`` mapping the octahedron pair of ``s``
    onto the classical pair ``(P, Q)`` of :func:`matrix_reading` of ``s``."""
    result = rsk_forward(s)
    P, Q = classical_rsk(matrix_reading(s))
    return {
        (up, low)
        for up, fu in TRANSFORMS.items()
        for low, fl in TRANSFORMS.items()
        if fu(result.upper) == P and fl(result.lower) == Q
    }
