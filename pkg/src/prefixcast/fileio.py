"""Parsers for the line-oriented input formats.

All formats share the same skeleton: whitespace-separated tokens, blank
lines skipped, ``#`` starts a comment (full-line or trailing). Parse errors
carry the source name and 1-based line number. Vertex ids stay strings
exactly as written; numeric interpretation is never guessed.
"""

from __future__ import annotations

from .fusion import Interval
from .graphs import DiGraph, Graph, VertexColoring, WeightedGraph
from .source_coding import CodeLengthSet, ProbabilityMassFunction


class FileFormatError(ValueError):
    """A line did not match the expected format; message names the line."""


def _rows(text: str, source: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        yield lineno, line.split(), source


def _fail(source: str, lineno: int, message: str):
    raise FileFormatError(f"{source}:{lineno}: {message}")


def _number(token: str, source: str, lineno: int, what: str) -> float:
    try:
        return float(token)
    except ValueError:
        _fail(source, lineno, f"{what} {token!r} is not a number")


def parse_pmf(text: str, source: str = "<pmf>") -> ProbabilityMassFunction:
    """``label probability`` per line."""
    pairs = []
    for lineno, tokens, src in _rows(text, source):
        if len(tokens) != 2:
            _fail(src, lineno, f"expected 'label probability', got {len(tokens)} tokens")
        pairs.append((tokens[0], _number(tokens[1], src, lineno, "probability")))
    if not pairs:
        raise FileFormatError(f"{source}: no entries")
    try:
        return ProbabilityMassFunction.from_pairs(pairs)
    except ValueError as err:
        raise FileFormatError(f"{source}: {err}") from err


def parse_lengths(text: str, d: int, source: str = "<lengths>") -> CodeLengthSet:
    """One codeword length per line."""
    lengths = []
    for lineno, tokens, src in _rows(text, source):
        if len(tokens) != 1:
            _fail(src, lineno, f"expected one integer, got {len(tokens)} tokens")
        try:
            lengths.append(int(tokens[0]))
        except ValueError:
            _fail(src, lineno, f"length {tokens[0]!r} is not an integer")
    if not lengths:
        raise FileFormatError(f"{source}: no lengths")
    try:
        return CodeLengthSet(tuple(lengths), d)
    except ValueError as err:
        raise FileFormatError(f"{source}: {err}") from err


def _parse_edge_lines(text: str, source: str):
    """Shared reader: `u v`, `u v w`, and `vertex u` lines, order preserved."""
    vertices: list = []
    seen = set()
    edges = []  # (u, v, weight or None)

    def add_vertex(v):
        if v not in seen:
            seen.add(v)
            vertices.append(v)

    for lineno, tokens, src in _rows(text, source):
        if tokens[0] == "vertex":
            if len(tokens) != 2:
                _fail(src, lineno, "expected 'vertex u'")
            add_vertex(tokens[1])
        elif len(tokens) == 2:
            add_vertex(tokens[0])
            add_vertex(tokens[1])
            edges.append((tokens[0], tokens[1], None, lineno))
        elif len(tokens) == 3:
            w = _number(tokens[2], src, lineno, "weight")
            add_vertex(tokens[0])
            add_vertex(tokens[1])
            edges.append((tokens[0], tokens[1], w, lineno))
        else:
            _fail(src, lineno, f"expected 'u v', 'u v w' or 'vertex u', got {len(tokens)} tokens")
    if not vertices:
        raise FileFormatError(f"{source}: no vertices")
    return vertices, edges


def parse_graph(text: str, source: str = "<graph>") -> Graph:
    vertices, edges = _parse_edge_lines(text, source)
    try:
        return Graph(tuple(vertices), tuple((u, v) for u, v, _, _ in edges))
    except ValueError as err:
        raise FileFormatError(f"{source}: {err}") from err


def parse_weighted_graph(text: str, source: str = "<graph>") -> WeightedGraph:
    """Weighted variant; bare `u v` lines default to weight 1 (hop count)."""
    vertices, edges = _parse_edge_lines(text, source)
    try:
        return WeightedGraph(
            tuple(vertices),
            tuple((u, v, 1.0 if w is None else w) for u, v, w, _ in edges),
        )
    except ValueError as err:
        raise FileFormatError(f"{source}: {err}") from err


def parse_digraph(text: str, source: str = "<digraph>") -> DiGraph:
    vertices, edges = _parse_edge_lines(text, source)
    try:
        return DiGraph(tuple(vertices), tuple((u, v) for u, v, _, _ in edges))
    except ValueError as err:
        raise FileFormatError(f"{source}: {err}") from err


def parse_coloring(text: str, source: str = "<coloring>") -> VertexColoring:
    """``vertex color`` per line."""
    entries = []
    for lineno, tokens, src in _rows(text, source):
        if len(tokens) != 2:
            _fail(src, lineno, f"expected 'vertex color', got {len(tokens)} tokens")
        entries.append((tokens[0], tokens[1]))
    if not entries:
        raise FileFormatError(f"{source}: no entries")
    try:
        return VertexColoring(tuple(entries))
    except ValueError as err:
        raise FileFormatError(f"{source}: {err}") from err


def parse_vertex_map(text: str, source: str = "<map>") -> dict:
    """``from to`` per line; duplicate sources rejected."""
    mapping: dict = {}
    for lineno, tokens, src in _rows(text, source):
        if len(tokens) != 2:
            _fail(src, lineno, f"expected 'from to', got {len(tokens)} tokens")
        if tokens[0] in mapping:
            _fail(src, lineno, f"vertex {tokens[0]!r} mapped twice")
        mapping[tokens[0]] = tokens[1]
    if not mapping:
        raise FileFormatError(f"{source}: no entries")
    return mapping


def parse_positions(text: str, source: str = "<positions>") -> dict:
    """``vertex x y`` per line."""
    positions: dict = {}
    for lineno, tokens, src in _rows(text, source):
        if len(tokens) != 3:
            _fail(src, lineno, f"expected 'vertex x y', got {len(tokens)} tokens")
        if tokens[0] in positions:
            _fail(src, lineno, f"vertex {tokens[0]!r} positioned twice")
        positions[tokens[0]] = (
            _number(tokens[1], src, lineno, "x"),
            _number(tokens[2], src, lineno, "y"),
        )
    if not positions:
        raise FileFormatError(f"{source}: no entries")
    return positions


def parse_intervals(text: str, source: str = "<intervals>") -> tuple:
    """``lo hi`` per line; returns a tuple of Interval."""
    out = []
    for lineno, tokens, src in _rows(text, source):
        if len(tokens) != 2:
            _fail(src, lineno, f"expected 'lo hi', got {len(tokens)} tokens")
        lo = _number(tokens[0], src, lineno, "lo")
        hi = _number(tokens[1], src, lineno, "hi")
        try:
            out.append(Interval(lo, hi))
        except ValueError as err:
            _fail(src, lineno, str(err))
    if not out:
        raise FileFormatError(f"{source}: no intervals")
    return tuple(out)
