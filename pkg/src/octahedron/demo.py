"""Built-in worked examples with golden values."""

from __future__ import annotations

from .grids import SquareArray
from .rsk import rsk_forward
from .tropical import integrate, propagate_forward, restrict_beta

# Printed with row 1 first.  The array is the second difference of the
# printed g; it sums to 18 like g, h, p and both tableaux.
EXAMPLE5_S = ((2, 3, 1), (1, 1, 5), (1, 2, 2))
EXAMPLE5_G = ((2, 5, 6), (3, 7, 13), (4, 10, 18))
EXAMPLE5_H = ((11, 7, 4), (8, 17, 10), (6, 13, 18))
EXAMPLE5_P = ((11, 7, 4), (8, 6, 3), (6, 5, 1))
EXAMPLE5_SHAPE = (11, 6, 1)
EXAMPLE5_LOWER = ((1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 3), (2, 2, 2, 2, 2, 3), (3,))
EXAMPLE5_UPPER = ((1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3), (2, 2, 2, 3, 3, 3), (3,))
EXAMPLE5_APEX = 18
# values shown in the pyramid figure, keyed by pyramid point; the figure
# draws i across and j up, so its (i, j) appear here as (j, i)
EXAMPLE5_FIGURE = {
    (1, 1, 1): 2, (1, 3, 1): 5, (1, 5, 1): 6,
    (3, 1, 1): 3, (3, 3, 1): 6, (3, 5, 1): 8,
    (5, 1, 1): 4, (5, 3, 1): 7, (5, 5, 1): 11,
    (2, 2, 2): 7, (2, 4, 2): 13, (4, 2, 2): 10, (4, 4, 2): 17,
}


def _grid_lines(rows) -> list[str]:
    width = max(len(str(v)) for row in rows for v in row)
    return ["  " + " ".join(str(v).rjust(width) for v in row) for row in rows]


def example5() -> tuple[str, list[str]]:
    s = SquareArray(EXAMPLE5_S)
    g = integrate(s)
    f = propagate_forward(g)
    h = restrict_beta(f)
    result = rsk_forward(s)
    p = result.plane_partition

    lines = ["example5 (rows listed from index 1 upward)", "s ="]
    lines += _grid_lines(s.rows)
    lines.append("g = integrate(s), interior =")
    lines += _grid_lines(g.interior())
    lines.append("f = propagate_forward(g), by level:")
    for k, level in enumerate(f.levels()):
        lines.append(f" level {k}:")
        lines += _grid_lines(level)
    lines.append(f"apex f(3,3,3) = {f.apex}")
    lines.append("h = restrict_beta(f), interior =")
    lines += _grid_lines(h.interior())
    lines.append("p = diagonal_difference(h) =")
    lines += _grid_lines(p.rows)
    lines.append(f"shape: {tuple(p.diagonal())}")
    lines.append("lower tableau:")
    lines += ["  " + " ".join(map(str, row)) for row in result.lower.rows()]
    lines.append("upper tableau:")
    lines += ["  " + " ".join(map(str, row)) for row in result.upper.rows()]
    text = "\n".join(lines) + "\n"

    mismatches = []

    def check(label, got, want):
        if got != want:
            mismatches.append(f"{label}: got {got}, want {want}")

    check("g", tuple(map(tuple, g.interior())), EXAMPLE5_G)
    check("apex", f.apex, EXAMPLE5_APEX)
    for point, value in EXAMPLE5_FIGURE.items():
        check(f"f{point}", f[point], value)
    check("h", tuple(map(tuple, h.interior())), EXAMPLE5_H)
    check("p", p.rows, EXAMPLE5_P)
    check("shape", tuple(p.diagonal()), EXAMPLE5_SHAPE)
    check("lower", tuple(map(tuple, result.lower.rows())), EXAMPLE5_LOWER)
    check("upper", tuple(map(tuple, result.upper.rows())), EXAMPLE5_UPPER)
    return text, mismatches


DEMOS = {"example5": example5}
