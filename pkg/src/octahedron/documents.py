"""Text documents exchanged by the command-line tool.

A document is a JSON object ``{"kind": ..., "n": ..., "data": ...}`` with an
optional ``"name"``.  Numbers are JSON integers or ``"p/q"`` strings.

==================  =====================================================
kind                data
==================  =====================================================
``matrix``          ``n`` rows; row ``r`` is ``X(r, 1..n)``
``array``           ``n`` rows; row ``i`` is ``s(i, 1..n)``
``corner-grid``     ``n`` rows of the interior; row ``i`` is ``g(i, 1..n)``;
                    row and column 0 are zero and never written
``plane-partition`` ``n`` rows; row ``i`` is ``p(i, 1..n)``
``pyramid``         ``n + 1`` levels; level ``k`` has rows ``i = k, k+2, ...``
                    each holding ``f(i, j, k)`` for ``j = k, k+2, ...``
``tableau-pair``    ``[lower, upper]``, each a list of tableau rows
==================  =====================================================

Row 1 comes first, so grids read top to bottom in a document appear
upside down compared with the usual drawing of a grid with its origin at
the bottom left.  Several documents may be concatenated in one stream.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import OctahedronError
from .grids import CornerGrid, PlanePartition, SquareArray, Value, exact
from .pyramid import Pyramid
from .rsk import Tableau

KINDS = ("matrix", "array", "corner-grid", "pyramid", "plane-partition", "tableau-pair")


class DocumentError(ValueError):
    """Malformed or mismatched input document."""


def encode_value(v: Value):
    v = exact(v)
    if isinstance(v, int):
        return v
    return f"{v.numerator}/{v.denominator}"


def decode_value(x) -> Value:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise DocumentError(f"numbers must be integers or 'p/q' strings, got {x!r}")
    try:
        return exact(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad number {x!r}") from exc


def _encode_rows(rows) -> list:
    return [[encode_value(v) for v in row] for row in rows]


def _decode_square(data, n: int) -> list[list[Value]]:
    if not isinstance(data, list) or len(data) != n or any(not isinstance(r, list) or len(r) != n for r in data):
        raise DocumentError(f"data must be {n} rows of {n} numbers")
    return [[decode_value(v) for v in row] for row in data]


class Document:
    def __init__(self, kind: str, n: int, data: Any, name: str | None = None):
        if kind not in KINDS:
            raise DocumentError(f"unknown kind {kind!r}")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DocumentError(f"n must be a positive integer, got {n!r}")
        self.kind, self.n, self.data, self.name = kind, n, data, name

    def to_json(self) -> dict:
        out = {"kind": self.kind, "n": self.n}
        if self.name is not None:
            out["name"] = self.name
        out["data"] = self.data
        return out

    def dumps(self) -> str:
        return render(self.to_json()) + "\n"

    # conversions from library objects

    @classmethod
    def from_array(cls, s: SquareArray, kind: str = "array", name: str | None = None) -> Document:
        return cls(kind, s.n, _encode_rows(s.rows), name)

    @classmethod
    def from_corner_grid(cls, g: CornerGrid, name: str | None = None) -> Document:
        if not g.has_boundary(0):
            raise ValueError("only grids vanishing on the south-west boundary can be written")
        return cls("corner-grid", g.n, _encode_rows(g.interior()), name)

    @classmethod
    def from_plane_partition(cls, p: SquareArray, name: str | None = None) -> Document:
        return cls("plane-partition", p.n, _encode_rows(p.rows), name)

    @classmethod
    def from_pyramid(cls, f: Pyramid, name: str | None = None) -> Document:
        return cls("pyramid", f.n, [_encode_rows(level) for level in f.levels()], name)

    @classmethod
    def from_tableaux(cls, lower: Tableau, upper: Tableau, name: str | None = None) -> Document:
        return cls("tableau-pair", lower.n, [lower.rows(), upper.rows()], name)

    # conversions to library objects

    def _expect(self, *kinds: str) -> None:
        if self.kind not in kinds:
            raise DocumentError(f"expected a document of kind {' or '.join(kinds)}, got {self.kind}")

    def to_array(self) -> SquareArray:
        self._expect("array", "matrix")
        return SquareArray(_decode_square(self.data, self.n))

    def to_corner_grid(self) -> CornerGrid:
        self._expect("corner-grid")
        return CornerGrid.from_interior(_decode_square(self.data, self.n), boundary=0)

    def to_plane_partition(self) -> PlanePartition:
        self._expect("plane-partition")
        try:
            return PlanePartition(_decode_square(self.data, self.n))
        except OctahedronError as exc:
            raise DocumentError(str(exc)) from exc

    def to_pyramid(self) -> Pyramid:
        self._expect("pyramid")
        levels = self.data
        if not isinstance(levels, list) or len(levels) != self.n + 1:
            raise DocumentError(f"pyramid data must hold {self.n + 1} levels")
        decoded = [_decode_square(level, self.n - k + 1) for k, level in enumerate(levels)]
        return Pyramid.from_levels(decoded)

    def to_tableaux(self) -> tuple[Tableau, Tableau]:
        self._expect("tableau-pair")
        if not isinstance(self.data, list) or len(self.data) != 2:
            raise DocumentError("tableau-pair data must be [lower, upper]")
        try:
            lower, upper = (
                Tableau.from_rows([[int(decode_value(x)) for x in row] for row in rows], self.n)
                for rows in self.data
            )
        except (OctahedronError, TypeError) as exc:
            raise DocumentError(f"bad tableau: {exc}") from exc
        return lower, upper


def render(obj, indent: int = 0) -> str:
    """Deterministic JSON: lists of scalars on one line, everything else indented."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {render(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(not isinstance(x, (list, dict)) for x in obj):
            return "[" + ", ".join(json.dumps(x) for x in obj) + "]"
        return "[\n" + ",\n".join(inner + render(x, indent + 1) for x in obj) + "\n" + pad + "]"
    return json.dumps(obj)


def parse(obj) -> Document:
    if not isinstance(obj, dict):
        raise DocumentError("a document must be a JSON object")
    unknown = set(obj) - {"kind", "n", "data", "name"}
    if unknown:
        raise DocumentError(f"unknown document fields: {sorted(unknown)}")
    try:
        return Document(obj["kind"], obj["n"], obj["data"], obj.get("name"))
    except KeyError as exc:
        raise DocumentError(f"missing field {exc.args[0]!r}") from None


def loads_all(text: str) -> list[Document]:
    decoder = json.JSONDecoder()
    docs = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        try:
            obj, pos = decoder.raw_decode(text, pos)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
        docs.append(parse(obj))
    return docs


def loads(text: str) -> Document:
    docs = loads_all(text)
    if len(docs) != 1:
        raise DocumentError(f"expected exactly one document, found {len(docs)}")
    return docs[0]


def format_value(v: Value) -> str:
    v = exact(v)
    return str(v) if isinstance(v, int) else f"{v.numerator}/{v.denominator}"

