"""Command-line front end.

Exit status: 0 on success, 1 when a checked property or invariant fails,
2 on malformed input or usage errors.  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from typing import Callable, Optional, Sequence

from . import algebraic, rsk, tropical
from .documents import Document, DocumentError, format_value, loads
from .errors import OctahedronError
from .grids import CornerGrid

PROPERTIES = ("t-polarized", "a-polarized", "supermodular", "inframodular", "theorem3", "bijection")


class PropertyFailure(Exception):
    """Raised by a command to exit with status 1."""


@contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _read_input(path: str) -> Document:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


# commands


def cmd_rsk(args) -> list[Document] | str:
    doc = _read_input(args.input)
    if args.inverse:
        if doc.kind == "tableau-pair":
            lower, upper = doc.to_tableaux()
            p = rsk.plane_partition_from_tableaux(lower, upper)
        else:
            p = doc.to_plane_partition()
        return [Document.from_array(rsk.rsk_inverse(p))]
    s = doc.to_array()
    result = rsk.rsk_forward(s)
    out = []
    if args.trace:
        g = tropical.integrate(s)
        f = tropical.propagate_forward(g)
        out += [
            Document.from_array(s, name="s"),
            Document.from_corner_grid(g, name="g"),
            Document.from_pyramid(f, name="f"),
            Document.from_corner_grid(tropical.restrict_beta(f), name="h"),
        ]
    out += [
        Document.from_plane_partition(result.plane_partition, name="p"),
        Document.from_tableaux(result.lower, result.upper, name="tableaux"),
    ]
    return out


def cmd_det(args) -> str:
    X = _read_input(args.input).to_array()
    if args.method == "elimination":
        value = algebraic.bareiss_determinant(X.rows)
    else:
        fell_back = []
        value = algebraic.dodgson_determinant(X, fallback=fell_back)
        if fell_back and args.method == "dodgson":
            _note(f"condensation hit a zero pivot at {fell_back[0]}; used fraction-free elimination")
    return format_value(value) + "\n"


def _first(violations) -> Optional[object]:
    return next(iter(violations), None)


def _verify(doc: Document, prop: str) -> Optional[str]:
    """Return None if ``prop`` holds, otherwise a description of the first counterexample."""
    kinds = {
        "t-polarized": ("pyramid",),
        "a-polarized": ("pyramid",),
        "supermodular": ("corner-grid", "array", "matrix"),
        "inframodular": ("corner-grid",),
        "theorem3": ("corner-grid",),
        "bijection": ("array", "corner-grid", "plane-partition"),
    }[prop]
    if doc.kind not in kinds:
        raise DocumentError(f"property {prop} applies to {', '.join(kinds)}, not {doc.kind}")
    if prop == "t-polarized":
        bad = _first(tropical.polarization_defects(doc.to_pyramid()))
        return None if bad is None else f"relation fails at {tuple(bad)}"
    if prop == "a-polarized":
        bad = _first(algebraic.dodgson_defects(doc.to_pyramid()))
        return None if bad is None else f"relation fails at {tuple(bad)}"
    if prop == "supermodular":
        v = doc.to_corner_grid() if doc.kind == "corner-grid" else doc.to_array()
        bad = _first(tropical.supermodular_violations(v))
        return None if bad is None else f"negative mixed difference at cell {bad}"
    if prop == "inframodular":
        bad = _first(tropical.inframodular_violations(doc.to_corner_grid()))
        return None if bad is None else f"{bad[0]}-break at cell {bad[1:]}"
    if prop == "theorem3":
        return _verify_theorem3(doc.to_corner_grid())
    return _verify_bijection(doc)


def _verify_theorem3(g: CornerGrid) -> Optional[str]:
    h = tropical.or_map(g)
    n = g.n
    super_g = tropical.is_supermodular(g)
    infra_h = tropical.is_inframodular(h) and h[n - 1, n - 1] <= h[n, n]
    if super_g != infra_h:
        return f"g supermodular: {super_g}, but h inframodular with h(n-1,n-1) <= h(n,n): {infra_h}"
    return None


def _verify_bijection(doc: Document) -> Optional[str]:
    if doc.kind == "corner-grid":
        g = doc.to_corner_grid()
        if tropical.or_map_inverse(tropical.or_map(g)) != g:
            return "inverse OR-map does not undo the OR-map"
        if tropical.or_map(tropical.or_map_inverse(g)) != g:
            return "OR-map does not undo the inverse OR-map"
        return None
    if doc.kind == "plane-partition":
        p = doc.to_plane_partition()
        back = rsk.rsk_forward(rsk.rsk_inverse(p)).plane_partition
        return None if back == p else "rsk_forward(rsk_inverse(p)) != p"
    s = doc.to_array()
    back = rsk.rsk_inverse(rsk.rsk_forward(s).plane_partition)
    return None if back == s else "rsk_inverse(rsk_forward(s)) != s"


def cmd_verify(args) -> str:
    doc = _read_input(args.input)
    failure = _verify(doc, args.property)
    if failure is not None:
        raise PropertyFailure(f"{args.property}: fails: {failure}")
    return f"{args.property}: holds\n"


def cmd_ormap(args) -> list[Document]:
    g = _read_input(args.input).to_corner_grid()
    h = tropical.or_map_inverse(g) if args.inverse else tropical.or_map(g)
    return [Document.from_corner_grid(h)]


def cmd_phi(args) -> list[Document]:
    s = _read_input(args.input).to_array()
    f = tropical.phi_bruteforce(s) if args.bruteforce else tropical.phi(s)
    return [Document.from_pyramid(f)]


def cmd_demo(args) -> str:
    from . import demo

    if args.name not in demo.DEMOS:
        raise DocumentError(f"unknown demo {args.name!r}; available: {', '.join(sorted(demo.DEMOS))}")
    text, mismatches = demo.DEMOS[args.name]()
    if args.check and mismatches:
        sys.stdout.write(text)
        raise PropertyFailure("golden check failed: " + "; ".join(mismatches))
    if args.check:
        text += "all golden values match\n"
    return text


# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octahedron", description="Octahedron recurrence, Dodgson condensation and RSK."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, io: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if io:
            p.add_argument("--input", "-i", default="-", help="input document ('-' for stdin)")
        p.add_argument("--output", "-o", default="-", help="output file ('-' for stdout)")
        p.set_defaults(func=fn)
        return p

    p = add("rsk", cmd_rsk, "array -> plane partition and tableau pair")
    p.add_argument("--inverse", action="store_true", help="plane partition or tableau pair -> array")
    p.add_argument("--trace", action="store_true", help="also print s, g, the pyramid and h")

    p = add("det", cmd_det, "exact determinant of a matrix")
    p.add_argument("--method", choices=("dodgson", "elimination", "auto"), default="auto")

    p = add("verify", cmd_verify, "check a property of a document")
    p.add_argument("--property", "-p", required=True, choices=PROPERTIES)

    p = add("ormap", cmd_ormap, "tropical OR-map g -> h on corner grids")
    p.add_argument("--inverse", action="store_true")

    p = add("phi", cmd_phi, "array -> T-polarized pyramid")
    p.add_argument("--bruteforce", action="store_true", help="enumerate path families (n <= 5)")

    p = add("demo", cmd_demo, "run a built-in worked example", io=False)
    p.add_argument("name")
    p.add_argument("--check", action="store_true", help="assert every golden value")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except PropertyFailure as exc:
        _note(str(exc))
        return 1
    except DocumentError as exc:
        _note(f"input error: {exc}")
        return 2
    except OctahedronError as exc:
        _note(f"{type(exc).__name__}: {exc}")
        return 1
    except (ValueError, TypeError) as exc:
        _note(f"input error: {exc}")
        return 2
    text = result if isinstance(result, str) else "".join(doc.dumps() for doc in result)
    with _open_out(args.output) as fh:
        fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
