"""Parsing of matrix and graph files, and output rendering helpers.

Matrix text format: first line ``n m``, then n+m lines of n space-separated
integers; lines starting with ``#`` are comments.  A JSON object with keys
``n``, ``m`` and ``rows`` is also accepted.  Graph text format: first line
the vertex count v (vertices are labeled 1..v in files, 0..v-1 in memory),
then one ``u w`` edge per line.
"""

from __future__ import annotations

import json

from .errors import ShapeMismatch
from .exchange import ExtendedExchangeMatrix, validate
from .graphs import Graph


def _strip_comments(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_matrix_text(text: str) -> ExtendedExchangeMatrix:
    lines = _strip_comments(text)
    if not lines:
        raise ShapeMismatch("empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise ShapeMismatch("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    rows = [[int(tok) for tok in line.split()] for line in lines[1:]]
    return validate(rows, n, m)


def parse_matrix_json(text: str) -> ExtendedExchangeMatrix:
    data = json.loads(text)
    try:
        return validate(data["rows"], int(data["n"]), int(data["m"]))
    except KeyError as missing:
        raise ShapeMismatch(f"matrix JSON lacks key {missing}")


def parse_matrix(text: str) -> ExtendedExchangeMatrix:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_matrix_json(text)
    return parse_matrix_text(text)


def load_matrix(path: str) -> ExtendedExchangeMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def render_matrix_text(matrix: ExtendedExchangeMatrix) -> str:
    lines = [f"{matrix.n} {matrix.m}"]
    lines += [" ".join(str(v) for v in row) for row in matrix.rows]
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    lines = _strip_comments(text)
    if not lines:
        raise ShapeMismatch("empty graph file")
    v = int(lines[0].split()[0])
    pairs = []
    for line in lines[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise ShapeMismatch(f"bad edge line: {line!r}")
        a, b = int(toks[0]), int(toks[1])
        if not (1 <= a <= v and 1 <= b <= v) or a == b:
            raise ShapeMismatch(f"edge ({a}, {b}) outside 1..{v}")
        pairs.append((a - 1, b - 1))
    return Graph.from_edges(v, pairs)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())
