"""Max-plus octahedron recurrence.

A function ``f`` on the pyramid lattice is T-polarized when it vanishes on
level 0 and every elementary octahedron centred at ``(i, j, k)`` satisfies::

    f(i-1,j-1,k) + f(i+1,j+1,k) = max(f(i,j,k-1) + f(i,j,k+1),
                                      f(i-1,j+1,k) + f(i+1,j-1,k))

Such a function is fixed by its restriction ``g`` to faces ABE, ACE (or
``h`` to DBE, DCE), and ``g`` is the double integral of the genetic array
``s`` with ``f = phi(s)``.  The OR-map ``g -> h`` sends supermodular
functions to inframodular ones.
"""

from __future__ import annotations

from typing import Iterator, Union

from . import paths as _paths
from .errors import NotInMD, NotSupermodular, SizeLimitExceeded
from .grids import CornerGrid, Level1Grid, SquareArray, Value
from .pyramid import (
    OctahedronCenter,
    Pyramid,
    PyramidPoint,
    alpha,
    beta,
    enumerate_centers,
    face_seeds,
    fill,
    is_point,
)

BRUTEFORCE_SIZE_LIMIT = 5


def polarization_defects(f: Pyramid) -> Iterator[Union[PyramidPoint, OctahedronCenter]]:
    """Nonzero level-0 points, then centers violating the max-plus relation."""
    for p, v in f.items():
        if p.k == 0 and v != 0:
            yield p
    for c in enumerate_centers(f.n):
        if f[c.low] + f[c.high] != max(f[c.below] + f[c.above], f[c.left] + f[c.right]):
            yield c


def is_T_polarized(f: Pyramid) -> bool:
    return next(polarization_defects(f), None) is None


def _forward_step(c: OctahedronCenter, f) -> Value:
    return max(f[c.below] + f[c.above], f[c.left] + f[c.right]) - f[c.low]


def _backward_step(c: OctahedronCenter, f) -> Value:
    return max(f[c.below] + f[c.above], f[c.left] + f[c.right]) - f[c.high]


def propagate_forward(g: CornerGrid) -> Pyramid:
    """The T-polarized function whose restriction to faces ABE, ACE is ``g``."""
    values = fill(g.n, face_seeds(g.n, g, "forward", 0), "forward", _forward_step)
    return Pyramid(g.n, values, polarized=True)


def propagate_backward(h: CornerGrid) -> Pyramid:
    """The T-polarized function whose restriction to faces DBE, DCE is ``h``."""
    values = fill(h.n, face_seeds(h.n, h, "backward", 0), "backward", _backward_step)
    return Pyramid(h.n, values, polarized=True)


def restrict_alpha(f: Pyramid) -> CornerGrid:
    return f.pullback(alpha)


def restrict_beta(f: Pyramid) -> CornerGrid:
    return f.pullback(beta)


def or_map(g: CornerGrid) -> CornerGrid:
    return restrict_beta(propagate_forward(g))


def or_map_inverse(h: CornerGrid) -> CornerGrid:
    return restrict_alpha(propagate_backward(h))


def integrate(s: SquareArray) -> CornerGrid:
    """``g(i, j)`` = sum of ``s(a, b)`` over ``a <= i, b <= j``; zero boundary."""
    n = s.n
    g = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            g[i][j] = s[i, j] + g[i - 1][j] + g[i][j - 1] - g[i - 1][j - 1]
    return CornerGrid(g)


def differentiate(g: CornerGrid) -> SquareArray:
    """Mixed second difference; inverse of :func:`integrate`."""
    if not g.has_boundary(0):
        raise ValueError("corner grid must vanish on the south-west boundary")
    return SquareArray.from_function(g.n, lambda i, j: g[i, j] - g[i - 1, j] - g[i, j - 1] + g[i - 1, j - 1])


def phi(s: SquareArray) -> Pyramid:
    """The ontogenetic function of ``s``, computed by forward propagation."""
    return propagate_forward(integrate(s))


def phi_bruteforce(s: SquareArray) -> Pyramid:
    """``phi`` straight from its definition: max over disjoint path families."""
    n = s.n
    if n > BRUTEFORCE_SIZE_LIMIT:
        raise SizeLimitExceeded(f"brute-force enumeration limited to n <= {BRUTEFORCE_SIZE_LIMIT} (n={n})")
    weights = {}

    def weight(path):
        if path not in weights:
            weights[path] = sum(s[a, b] for a, b in path.nodes)
        return weights[path]

    def value(i, j, k):
        if k == 0:
            return 0
        return max(sum(weight(p) for p in family) for family in _paths.disjoint_families(i, j, k))

    return Pyramid.from_function(n, value)


def _table(v: Union[CornerGrid, SquareArray]) -> tuple[tuple[Value, ...], ...]:
    return v.rows


def supermodular_violations(v: Union[CornerGrid, SquareArray]) -> Iterator[tuple[int, int]]:
    """Cells with a negative mixed second difference.

    For a corner grid the cells are ``1..n`` (the boundary takes part in
    the differences); for a square array or level-1 grid they are
    ``2..n``.  Cells are reported in the table's own indices.
    """
    t = _table(v)
    offset = 0 if isinstance(v, CornerGrid) else 1
    for a in range(1, len(t)):
        for b in range(1, len(t)):
            if t[a][b] - t[a - 1][b] - t[a][b - 1] + t[a - 1][b - 1] < 0:
                yield a + offset, b + offset


def is_supermodular(v: Union[CornerGrid, SquareArray]) -> bool:
    return next(supermodular_violations(v), None) is None


def inframodular_violations(v: CornerGrid) -> Iterator[tuple[str, int, int]]:
    """Failures of the two inframodular inequalities, as (kind, i, j).

    ``H`` marks ``h(i,j) + h(i+1,j) < h(i,j-1) + h(i+1,j+1)`` and ``V`` marks
    ``h(i,j) + h(i,j+1) < h(i-1,j) + h(i+1,j+1)``, for every (i, j) where all
    four terms exist.
    """
    t = _table(v)
    m = len(t)
    for i in range(m):
        for j in range(m):
            if i + 1 < m and 1 <= j and j + 1 < m:
                if t[i][j] + t[i + 1][j] < t[i][j - 1] + t[i + 1][j + 1]:
                    yield "H", i, j
            if 1 <= i and i + 1 < m and j + 1 < m:
                if t[i][j] + t[i][j + 1] < t[i - 1][j] + t[i + 1][j + 1]:
                    yield "V", i, j


def is_inframodular(v: CornerGrid) -> bool:
    return next(inframodular_violations(v), None) is None


def is_discretely_concave(v: CornerGrid) -> bool:
    return is_supermodular(v) and is_inframodular(v)


def res1(f: Pyramid) -> Level1Grid:
    """Restriction to level 1, as values on the odd lattice."""
    return Level1Grid(f.level(1))


def supermodular_to_polarized(b: Level1Grid) -> Pyramid:
    """A T-polarized function restricting to ``b`` on level 1.

    ``f(i,j,k) = b(i-k+1, j-k+1) + b(i-k+3, j-k+3) + ... + b(i+k-1, j+k-1)``
    in odd-lattice coordinates.
    """
    if not isinstance(b, Level1Grid):
        b = Level1Grid(b.rows)
    bad = next(supermodular_violations(b), None)
    if bad is not None:
        raise NotSupermodular(f"level-1 data not supermodular at cell {bad}")
    return Pyramid.from_function(
        b.n,
        lambda i, j, k: sum(b.at(i - k + 1 + 2 * t, j - k + 1 + 2 * t) for t in range(k)),
        polarized=True,
    )


def is_md(s: SquareArray) -> bool:
    """True iff ``s(i, j) <= s(i+1, j+1)`` wherever both are defined."""
    return all(s[i, j] <= s[i + 1, j + 1] for i in range(1, s.n) for j in range(1, s.n))


def phi_md_closed_form(s: SquareArray, p) -> Value:
    """``phi(s)`` at ``p`` for diagonally increasing ``s``, as a difference of two rectangle sums."""
    if not is_md(s):
        raise NotInMD("array must satisfy s(i,j) <= s(i+1,j+1)")
    i, j, k = p
    if not is_point(s.n, p):
        raise ValueError(f"{tuple(p)} is not a pyramid point for n={s.n}")

    def rect(a_max, b_max):
        return sum(s[a, b] for a in range(1, a_max + 1) for b in range(1, b_max + 1))

    return rect((i + k) // 2, (j + k) // 2) - rect((i - k) // 2, (j - k) // 2)
