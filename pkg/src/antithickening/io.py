"""Plain-text formats for trigraphs and thickening maps.

Trigraph files::

    trigraph <n>
    <u> <v> strong|semi        # one line per adjacent pair, 0-based

Unlisted pairs are strongly antiadjacent; ``#`` starts a comment.  Map files::

    thickening <n_reduced> <n_original>
    <v'>: <v1> <v2> ...
"""

from __future__ import annotations

from pathlib import Path

from .antithicken import ThickeningMap
from .exceptions import DomainError, ParseError
from .trigraph import Trigraph

__all__ = [
    "parse_trigraph",
    "serialize_trigraph",
    "parse_map",
    "serialize_map",
    "read_trigraph",
    "write_trigraph",
    "read_map",
    "write_map",
]


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative value {value}", lineno)
    return value


def parse_trigraph(text: str) -> Trigraph:
    lines = _lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("empty input: expected 'trigraph <n>'")
    lineno, line = header
    parts = line.split()
    if len(parts) != 2 or parts[0] != "trigraph":
        raise ParseError(f"expected 'trigraph <n>', got {line!r}", lineno)
    n = _int(parts[1], lineno)
    strong, semi = [], []
    seen: dict[tuple[int, int], int] = {}
    mate: dict[int, int] = {}
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"expected '<u> <v> strong|semi', got {line!r}", lineno)
        u, v = _int(tokens[0], lineno), _int(tokens[1], lineno)
        kind = tokens[2]
        if u == v:
            raise ParseError(f"self-pair ({u}, {v})", lineno)
        if u >= n or v >= n:
            raise ParseError(f"vertex index out of range for n={n}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"pair {key} already given on line {seen[key]}", lineno)
        seen[key] = lineno
        if kind == "strong":
            strong.append(key)
        elif kind == "semi":
            for w in key:
                if w in mate:
                    raise ParseError(
                        f"semiedges must form a matching; vertex {w} already semiadjacent "
                        f"(line {mate[w]})",
                        lineno,
                    )
                mate[w] = lineno
            semi.append(key)
        elif kind != "strong-anti":
            raise ParseError(f"unknown pair kind {kind!r}", lineno)
    return Trigraph(n, strong, semi)


def serialize_trigraph(G: Trigraph) -> str:
    out = [f"trigraph {G.n}"]
    out += [f"{u} {v} {t.symbol}" for u, v, t in G.pairs()]
    return "\n".join(out) + "\n"


def parse_map(text: str) -> ThickeningMap:
    lines = _lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("empty input: expected 'thickening <n_reduced> <n_original>'")
    lineno, line = header
    parts = line.split()
    if len(parts) != 3 or parts[0] != "thickening":
        raise ParseError(f"expected 'thickening <n_reduced> <n_original>', got {line!r}", lineno)
    k, n = _int(parts[1], lineno), _int(parts[2], lineno)
    found: dict[int, tuple[int, ...]] = {}
    for lineno, line in lines:
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected '<v>: <vertices>', got {line!r}", lineno)
        v = _int(head.strip(), lineno)
        if v >= k:
            raise ParseError(f"reduced vertex {v} out of range for {k}", lineno)
        if v in found:
            raise ParseError(f"reduced vertex {v} listed twice", lineno)
        found[v] = tuple(_int(t, lineno) for t in rest.split())
    missing = [v for v in range(k) if v not in found]
    if missing:
        raise ParseError(f"reduced vertices {missing} have no part")
    try:
        return ThickeningMap(n, tuple(found[v] for v in range(k)))
    except DomainError as e:
        raise ParseError(str(e)) from None


def serialize_map(I: ThickeningMap) -> str:
    out = [f"thickening {I.source_n} {I.target_n}"]
    out += [f"{v}: " + " ".join(map(str, part)) for v, part in enumerate(I.parts)]
    return "\n".join(out) + "\n"


def read_trigraph(path: str | Path) -> Trigraph:
    return parse_trigraph(Path(path).read_text())


def write_trigraph(G: Trigraph, path: str | Path) -> None:
    Path(path).write_text(serialize_trigraph(G))


def read_map(path: str | Path) -> ThickeningMap:
    return parse_map(Path(path).read_text())


def write_map(I: ThickeningMap, path: str | Path) -> None:
    Path(path).write_text(serialize_map(I))
