"""Plain-text file formats.

Poset file::

    # comment
    poset 3
    cover 0 2
    cover 1 2

Ideal map file (poset paths relative to the ideal map file)::

    idealmap
    X x.poset
    Y y.poset
    F 0 0
    F 1 0 1

Module dump: ``dim <idx> <d>`` per element, then ``map <i> <j>`` per cover
followed by ``dims[j]`` rows of ``p/q`` entries. Maps between a zero
space and anything are omitted.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from . import linalg
from .errors import ParseError
from .gamma import IdealMap
from .poset import Poset, poset_from_covers
from .rep import Module


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_poset(text: str) -> Poset:
    n = None
    covers = []
    for lineno, tok in _lines(text):
        if n is None:
            if tok[0] != "poset" or len(tok) != 2:
                raise ParseError(f"line {lineno}: expected 'poset <n>'")
            n = _int(tok[1], lineno)
            if n < 0:
                raise ParseError(f"line {lineno}: negative size")
        elif tok[0] == "cover" and len(tok) == 3:
            i, j = _int(tok[1], lineno), _int(tok[2], lineno)
            if not (0 <= i < n and 0 <= j < n):
                raise ParseError(f"line {lineno}: index out of range")
            covers.append((i, j))
        else:
            raise ParseError(f"line {lineno}: expected 'cover <i> <j>'")
    if n is None:
        raise ParseError("missing 'poset <n>' header")
    return poset_from_covers(n, covers)


def load_poset(path) -> Poset:
    return parse_poset(Path(path).read_text())


def dump_poset(P: Poset) -> str:
    lines = [f"poset {P.size}"] + [f"cover {u} {v}" for u, v in P.covers]
    return "\n".join(lines) + "\n"


def parse_idealmap(text: str, root=".") -> IdealMap:
    root = Path(root)
    X = Y = None
    assignment: dict[int, frozenset] = {}
    seen_header = False
    for lineno, tok in _lines(text):
        if not seen_header:
            if tok != ["idealmap"]:
                raise ParseError(f"line {lineno}: expected 'idealmap'")
            seen_header = True
        elif tok[0] in ("X", "Y") and len(tok) == 2:
            P = load_poset(root / tok[1])
            if tok[0] == "X":
                X = P
            else:
                Y = P
        elif tok[0] == "F" and len(tok) >= 2:
            if X is None or Y is None:
                raise ParseError(f"line {lineno}: F line before X and Y")
            y = _int(tok[1], lineno)
            if not 0 <= y < Y.size:
                raise ParseError(f"line {lineno}: y out of range")
            if y in assignment:
                raise ParseError(f"line {lineno}: F({y}) given twice")
            xs = [_int(t, lineno) for t in tok[2:]]
            if any(not 0 <= x < X.size for x in xs):
                raise ParseError(f"line {lineno}: x out of range")
            assignment[y] = frozenset(xs)
        else:
            raise ParseError(f"line {lineno}: unrecognised line")
    if X is None or Y is None:
        raise ParseError("ideal map needs both X and Y")
    missing = [y for y in range(Y.size) if y not in assignment]
    if missing:
        raise ParseError(f"no F line for y in {missing}")
    return IdealMap(X, Y, tuple(assignment[y] for y in range(Y.size)))


def load_idealmap(path) -> IdealMap:
    path = Path(path)
    return parse_idealmap(path.read_text(), root=path.parent)


def dump_idealmap(F: IdealMap, x_file: str, y_file: str) -> str:
    lines = ["idealmap", f"X {x_file}", f"Y {y_file}"]
    for y in range(F.Y.size):
        lines.append(" ".join(["F", str(y)] + [str(x) for x in sorted(F(y))]))
    return "\n".join(lines) + "\n"


def dump_module(M: Module) -> str:
    lines = [f"dim {w} {d}" for w, d in enumerate(M.dims)]
    for (u, v), m in sorted(M.maps.items()):
        if m.size == 0:
            continue
        lines.append(f"map {u} {v}")
        for row in m:
            lines.append(" ".join(linalg.format_fraction(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_module(text: str, base: Poset) -> Module:
    dims: dict[int, int] = {}
    maps = {}
    rows_left = 0
    current = None
    for lineno, tok in _lines(text):
        if rows_left:
            try:
                current[1].append([Fraction(t) for t in tok])
            except ValueError:
                raise ParseError(f"line {lineno}: bad rational entry") from None
            rows_left -= 1
            continue
        if tok[0] == "dim" and len(tok) == 3:
            dims[_int(tok[1], lineno)] = _int(tok[2], lineno)
        elif tok[0] == "map" and len(tok) == 3:
            u, v = _int(tok[1], lineno), _int(tok[2], lineno)
            if v not in dims:
                raise ParseError(f"line {lineno}: map before the target dimension")
            current = ((u, v), [])
            maps[(u, v)] = current
            rows_left = dims[v]
        else:
            raise ParseError(f"line {lineno}: unrecognised line")
    if rows_left:
        raise ParseError("truncated matrix")
    if sorted(dims) != list(range(base.size)):
        raise ParseError("need exactly one dim line per element")
    d = [dims[w] for w in range(base.size)]
    try:
        mats = {}
        for (u, v), (_, rows) in maps.items():
            mats[(u, v)] = linalg.matrix(rows, (d[v], d[u])) if d[u] and d[v] else linalg.zeros(d[v], d[u])
        return Module(base, d, mats)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
