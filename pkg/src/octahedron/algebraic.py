"""Exact-rational octahedron recurrence.

The pyramid of solid minors of a square matrix satisfies the Dodgson
condensation rule at every elementary octahedron::

    F(i,j,k+1) F(i,j,k-1) = F(i-1,j-1,k) F(i+1,j+1,k) - F(i-1,j+1,k) F(i+1,j-1,k)

Functions with ``F = 1`` on level 0 that satisfy this rule are called
A-polarized.  They can also be grown from a genetic array ``W`` as sums
over vertex-disjoint path families, and are determined by their Gauss
data ``G`` (faces ABE, ACE) or ``H`` (faces DBE, DCE).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Optional, Sequence

from . import paths as _paths
from .errors import DivisionByZero, SizeLimitExceeded
from .grids import CornerGrid, SquareArray, Value, exact
from .pyramid import (
    OctahedronCenter,
    Pyramid,
    PyramidPoint,
    alpha,
    beta,
    enumerate_centers,
    face_seeds,
    fill,
)

GENETIC_SIZE_LIMIT = 6


def bareiss_determinant(rows: Sequence[Sequence[Value]]) -> Value:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    m = [[exact(v) for v in row] for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                # exact: the quotient is a minor of the input
                m[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            m[i][k] = 0
        prev = pivot
    return exact(sign * m[n - 1][n - 1])


def _submatrix(X: SquareArray, i: int, j: int, k: int) -> list[list[Value]]:
    r0, c0 = (i - k) // 2, (j - k) // 2
    return [[X[r0 + a, c0 + b] for b in range(1, k + 1)] for a in range(1, k + 1)]


def solid_minor_pyramid(X: SquareArray) -> Pyramid:
    """``F(i,j,k)`` = determinant of the ``k x k`` solid minor seen from (i,j,k)."""
    n = X.n
    return Pyramid.from_function(
        n, lambda i, j, k: 1 if k == 0 else bareiss_determinant(_submatrix(X, i, j, k)), polarized=True
    )


def dodgson_defects(F: Pyramid) -> Iterator[PyramidPoint | OctahedronCenter]:
    """Level-0 points not equal to 1, then centers violating the Dodgson rule."""
    for p, v in F.items():
        if p.k == 0 and v != 1:
            yield p
    for c in enumerate_centers(F.n):
        lhs = F[c.above] * F[c.below]
        rhs = F[c.low] * F[c.high] - F[c.left] * F[c.right]
        if lhs != rhs:
            yield c


def is_A_polarized(F: Pyramid) -> bool:
    return next(dodgson_defects(F), None) is None


def _dodgson_step(center: OctahedronCenter, F) -> Value:
    d = F[center.low]
    if d == 0:
        raise DivisionByZero(center.low)
    return exact(Fraction(F[center.below] * F[center.above] + F[center.left] * F[center.right]) / d)


def dodgson_propagate(G: CornerGrid) -> Pyramid:
    """The A-polarized function whose Gauss data (faces ABE, ACE) is ``G``.

    Raises :class:`DivisionByZero` when the recurrence meets a zero
    divisor, i.e. when the data do not come from a generic matrix.
    """
    if not G.has_boundary(1):
        raise ValueError("Gauss data must equal 1 on the south-west boundary")
    n = G.n
    values = fill(n, face_seeds(n, G, "forward", 1), "forward", _dodgson_step)
    return Pyramid(n, values, polarized=True)


def extract_G(F: Pyramid) -> CornerGrid:
    return F.pullback(alpha)


def extract_H(F: Pyramid) -> CornerGrid:
    return F.pullback(beta)


def _check_genetic_size(n: int) -> None:
    if n > GENETIC_SIZE_LIMIT:
        raise SizeLimitExceeded(
            f"path enumeration limited to n <= {GENETIC_SIZE_LIMIT}; use solid minors instead (n={n})"
        )


def _path_weight(W: SquareArray, path) -> Value:
    w = 1
    for a, b in path.nodes:
        w *= W[a, b]
    return w


def genetic_to_pyramid(W: SquareArray) -> Pyramid:
    """Sum over vertex-disjoint path families of the product of ``W`` on their nodes."""
    n = W.n
    _check_genetic_size(n)
    weights = {}

    def weight(path):
        if path not in weights:
            weights[path] = _path_weight(W, path)
        return weights[path]

    def value(i, j, k):
        if k == 0:
            return 1
        total = 0
        for family in _paths.disjoint_families(i, j, k):
            term = 1
            for path in family:
                term *= weight(path)
            total += term
        return total

    return Pyramid.from_function(n, value, polarized=True)


def matrix_from_genetic(W: SquareArray) -> SquareArray:
    """``X(i, j)`` = sum over single paths from column ``i`` to row ``j``."""
    n = W.n
    _check_genetic_size(n)
    return SquareArray.from_function(n, lambda i, j: sum(_path_weight(W, p) for p in _paths.paths(i, j)))


def genetic_from_G(G: CornerGrid) -> SquareArray:
    """Recover the genetic array from Gauss data by the rectangle-ratio formula."""
    if not G.has_boundary(1):
        raise ValueError("Gauss data must equal 1 on the south-west boundary")
    for i, j in G.cells():
        if G[i, j] == 0:
            raise DivisionByZero((i, j), f"G{(i, j)} = 0; Gauss data are not invertible")
    return SquareArray.from_function(
        G.n,
        lambda i, j: Fraction(G[i, j] * G[i - 1, j - 1]) / (G[i - 1, j] * G[i, j - 1]),
    )


def is_totally_positive_solid(X: SquareArray) -> bool:
    """True iff every solid minor of ``X`` is strictly positive."""
    F = solid_minor_pyramid(X)
    return all(v > 0 for p, v in F.items() if p.k >= 1)


def condensation_determinant(X: SquareArray) -> Value:
    """Determinant by Dodgson condensation.

    Raises :class:`DivisionByZero` with the ``(level, row, column)`` of the
    first zero interior entry met.
    """
    n = X.n
    prev = [[1] * (n + 1) for _ in range(n + 1)]
    cur = [list(row) for row in X.rows]
    for size in range(n - 1, 0, -1):
        nxt = []
        for r in range(size):
            row = []
            for c in range(size):
                d = prev[r + 1][c + 1]
                if d == 0:
                    raise DivisionByZero((n - size - 1, r + 1, c + 1))
                num = cur[r][c] * cur[r + 1][c + 1] - cur[r][c + 1] * cur[r + 1][c]
                row.append(exact(Fraction(num) / d))
            nxt.append(row)
        prev, cur = cur, nxt
    return exact(cur[0][0])


def dodgson_determinant(X: SquareArray, fallback: Optional[list] = None) -> Value:
    """Determinant by condensation, falling back to Bareiss elimination on a zero pivot.

    If ``fallback`` is a list, the zero-pivot location is appended to it
    whenever the fallback is taken.
    """
    try:
        return condensation_determinant(X)
    except DivisionByZero as exc:
        if fallback is not None:
            fallback.append(exc.point)
        return bareiss_determinant(X.rows)
