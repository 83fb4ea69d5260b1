"""Text formats for graphs and labelings.

Graph files: UTF-8 lines, ``#`` starts a comment, first non-comment line
``vertices N``, then one ``u v`` edge per line with 0-based decimal ids,
u < v, sorted lexicographically. Product graphs additionally carry one
``# coord <id> <row> <col> <star>`` comment per vertex.

Labeling files: one ``<vertex_id> <label>`` line per vertex, sorted by
id, plus a trailing ``# span <S>`` comment that is re-checked on parse.
"""
from __future__ import annotations

from pathlib import Path
from typing import Mapping

from .graphs import Graph
from .labeling import Labeling
from .product import ProductGraph, VertexCoord


class FormatError(ValueError):
    """The text does not follow the expected file format."""


def format_graph(g: Graph, coords: Mapping[int, VertexCoord] | None = None) -> str:
    lines = [f"vertices {g.num_vertices}"]
    if coords is not None:
        for vid in sorted(coords):
            c = coords[vid]
            lines.append(f"# coord {vid} {c.row} {c.col} {c.star}")
    for u, v in sorted(g.edges()):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def format_product_graph(pg: ProductGraph) -> str:
    coords = {vid: pg.coord_of(vid) for vid in range(pg.graph.num_vertices)}
    return format_graph(pg.graph, coords)


def parse_graph(text: str) -> tuple[Graph, dict[int, VertexCoord] | None]:
    """Parse a graph file; returns the graph and coordinates when present."""
    num_vertices: int | None = None
    coords: dict[int, VertexCoord] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if fields[:1] == ["coord"]:
                if len(fields) != 5:
                    raise FormatError(f"line {lineno}: malformed coord comment")
                vid, row, col, star = (int(x) for x in fields[1:])
                coords[vid] = VertexCoord(row, col, star)
            continue
        fields = line.split()
        if num_vertices is None:
            if len(fields) != 2 or fields[0] != "vertices":
                raise FormatError(f"line {lineno}: expected 'vertices N' header")
            num_vertices = int(fields[1])
            continue
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v' edge line")
        u, v = int(fields[0]), int(fields[1])
        if u >= v:
            raise FormatError(f"line {lineno}: edges must satisfy u < v")
        edges.append((u, v))
    if num_vertices is None:
        raise FormatError("missing 'vertices N' header")
    graph = Graph.from_edges(num_vertices, edges)
    return graph, (coords or None)


def format_labeling(labeling: Labeling) -> str:
    lines = [f"{vid} {label}" for vid, label in enumerate(labeling.labels)]
    lines.append(f"# span {labeling.span}")
    return "\n".join(lines) + "\n"


def parse_labeling(text: str) -> Labeling:
    """Parse a labeling file, re-checking the span comment when present."""
    entries: dict[int, int] = {}
    declared_span: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if fields[:1] == ["span"]:
                if len(fields) != 2:
                    raise FormatError(f"line {lineno}: malformed span comment")
                declared_span = int(fields[1])
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected '<vertex_id> <label>'")
        vid, label = int(fields[0]), int(fields[1])
        if vid in entries:
            raise FormatError(f"line {lineno}: duplicate vertex id {vid}")
        entries[vid] = label
    if not entries:
        raise FormatError("empty labeling file")
    if sorted(entries) != list(range(len(entries))):
        raise FormatError("vertex ids must be exactly 0..N-1")
    labeling = Labeling(tuple(entries[v] for v in range(len(entries))))
    if declared_span is not None and declared_span != labeling.span:
        raise FormatError(
            f"span comment says {declared_span}, labels span {labeling.span}"
        )
    return labeling


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")
