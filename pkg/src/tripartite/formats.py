"""
Plain-text graph formats.

TG3 (tripartite)::

    TG3 1 n=<n>
    [12]
    <i> <j>
    [13]
    [23]

BG2 (bipartite)::

    BG2 1 nl=<nL> nr=<nR>
    <i> <j>

Indices are 0-based within their part, lines end in LF and ``#`` lines are
comments.  The encoder writes edges in sorted order and omits empty layer
sections, so an edgeless graph encodes to its header line alone.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .graph import LAYERS, BipartiteGraph, TripartiteGraph

_TG3_HEADER = re.compile(r"^TG3 1 n=(\d+)$")
_BG2_HEADER = re.compile(r"^BG2 1 nl=(\d+) nr=(\d+)$")
_SECTION = re.compile(r"^\[(\d)(\d)\]$")
_EDGE = re.compile(r"^(\d+) (\d+)$")


def encode_tg3(G: TripartiteGraph) -> str:
    lines = [f"TG3 1 n={G.n}"]
    for (a, b), edges in G.edges().items():
        if edges:
            lines.append(f"[{a}{b}]")
            lines.extend(f"{i} {j}" for i, j in edges)
    return "\n".join(lines) + "\n"


def encode_bg2(B: BipartiteGraph) -> str:
    lines = [f"BG2 1 nl={B.nl} nr={B.nr}"]
    lines.extend(f"{i} {j}" for i, j in B.edges())
    return "\n".join(lines) + "\n"


def encode(G) -> str:
    if isinstance(G, TripartiteGraph):
        return encode_tg3(G)
    if isinstance(G, BipartiteGraph):
        return encode_bg2(G)
    raise TypeError(f"cannot encode {type(G).__name__}")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_edge(line, lineno, nl, nr, seen):
    m = _EDGE.match(line)
    if not m:
        raise ParseError(f"malformed edge line {line!r}", lineno)
    i, j = int(m.group(1)), int(m.group(2))
    if i >= nl or j >= nr:
        raise ParseError(f"edge ({i}, {j}) out of range", lineno)
    if (i, j) in seen:
        raise ParseError(f"duplicate edge ({i}, {j})", lineno)
    seen.add((i, j))


def decode_tg3(text: str) -> TripartiteGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, head = lines[0]
    m = _TG3_HEADER.match(head)
    if not m:
        raise ParseError(f"bad TG3 header {head!r}", lineno)
    n = int(m.group(1))
    if n == 0:
        raise ParseError("part size must be positive", lineno)
    edges = {key: set() for key in LAYERS}
    opened = set()
    current = None
    for lineno, line in lines[1:]:
        sec = _SECTION.match(line)
        if sec:
            key = (int(sec.group(1)), int(sec.group(2)))
            if key[0] == key[1]:
                raise ParseError(f"edges inside part {key[0]} are not allowed", lineno)
            if key not in edges:
                raise ParseError(f"unknown layer section {line}", lineno)
            if key in opened:
                raise ParseError(f"repeated section {line}", lineno)
            opened.add(key)
            current = key
            continue
        if current is None:
            raise ParseError("edge line before any layer section", lineno)
        _parse_edge(line, lineno, n, n, edges[current])
    return TripartiteGraph.from_edges(n, edges[(1, 2)], edges[(1, 3)], edges[(2, 3)])


def decode_bg2(text: str) -> BipartiteGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, head = lines[0]
    m = _BG2_HEADER.match(head)
    if not m:
        raise ParseError(f"bad BG2 header {head!r}", lineno)
    nl, nr = int(m.group(1)), int(m.group(2))
    if nl == 0 or nr == 0:
        raise ParseError("part sizes must be positive", lineno)
    seen: set = set()
    for lineno, line in lines[1:]:
        _parse_edge(line, lineno, nl, nr, seen)
    return BipartiteGraph.from_edges(nl, nr, seen)


def decode(text: str):
    """Decode either format, dispatching on the header."""
    for lineno, line in _content_lines(text):
        if line.startswith("TG3"):
            return decode_tg3(text)
        if line.startswith("BG2"):
            return decode_bg2(text)
        raise ParseError(f"unrecognised header {line!r}", lineno)
    raise ParseError("empty input", 1)


def read_graph(path) -> TripartiteGraph | BipartiteGraph:
    return decode(Path(path).read_text())


def write_graph(G, path) -> None:
    Path(path).write_text(encode(G), newline="\n")
