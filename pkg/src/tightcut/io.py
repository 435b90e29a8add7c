"""Plain-text edge lists, vertex-weight files, solutions and mapping sidecars.

Graph format: one arc per line, ``tail head [weight]``.  Vertex ids are
non-negative integers, the weight defaults to 1 and ``inf`` marks an arc
that must never be cut.  Repeating a line creates a
parallel arc and ``v v`` is a loop.  Blank lines and lines starting with ``#``
are ignored.  Vertex-weight files hold ``vertex weight`` pairs.
"""

from __future__ import annotations

import math
import os
from collections.abc import Iterable, Mapping

from .errors import GraphParseError
from .graph import MultiDigraph

PathLike = str | os.PathLike


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _vertex(token: str, lineno: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise GraphParseError(f"vertex id {token!r} is not an integer", lineno) from None
    if v < 0:
        raise GraphParseError(f"vertex id {v} is negative", lineno)
    return v


def _weight(token: str, lineno: int) -> float:
    try:
        w = float(token)
    except ValueError:
        raise GraphParseError(f"weight {token!r} is not a number", lineno) from None
    if not w > 0 or math.isnan(w):
        raise GraphParseError(f"weight {token!r} must be a positive number", lineno)
    return w


def parse_graph(text: str) -> tuple[MultiDigraph, dict[int, float]]:
    """Parse an edge list; returns the graph and its arc weights."""
    pairs = []
    weights = {}
    for lineno, fields in _data_lines(text):
        if len(fields) not in (2, 3):
            raise GraphParseError(f"expected 'tail head [weight]', got {len(fields)} fields", lineno)
        t = _vertex(fields[0], lineno)
        h = _vertex(fields[1], lineno)
        weights[len(pairs)] = _weight(fields[2], lineno) if len(fields) == 3 else 1.0
        pairs.append((t, h))
    return MultiDigraph(pairs), weights


def read_graph(path: PathLike) -> tuple[MultiDigraph, dict[int, float]]:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def parse_vertex_weights(text: str) -> dict[int, float]:
    weights = {}
    for lineno, fields in _data_lines(text):
        if len(fields) != 2:
            raise GraphParseError("expected 'vertex weight'", lineno)
        weights[_vertex(fields[0], lineno)] = _weight(fields[1], lineno)
    return weights


def read_vertex_weights(path: PathLike) -> dict[int, float]:
    with open(path, encoding="utf-8") as fh:
        return parse_vertex_weights(fh.read())


def _fmt(w: float) -> str:
    if math.isinf(w):
        return "inf"
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def format_graph(g: MultiDigraph, weights: Mapping[int, float] | None = None) -> str:
    """Edge list in canonical arc order.

    Weights are written only when some arc differs from 1.  Isolated vertices
    cannot be expressed in the format and are dropped.
    """
    write_w = weights is not None and any(weights[a] != 1 for a in g.arcs)
    lines = []
    for a in g.arcs:
        t, h = g.endpoints(a)
        lines.append(f"{t} {h} {_fmt(weights[a])}" if write_w else f"{t} {h}")
    return "\n".join(lines) + ("\n" if lines else "")


def write_graph(path: PathLike, g: MultiDigraph, weights: Mapping[int, float] | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, weights))


def format_solution(ids: Iterable[int], weight: float) -> str:
    """``# weight <w>`` header followed by one id per line, ascending."""
    body = "".join(f"{i}\n" for i in sorted(ids))
    return f"# weight {_fmt(weight)}\n{body}"


def parse_solution(text: str) -> tuple[list[int], float | None]:
    weight = None
    ids = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "weight":
                weight = float(parts[1])
            continue
        ids.append(_vertex(line, lineno))
    return ids, weight


def format_mapping(pairs: Iterable[tuple[int, int]]) -> str:
    """Sidecar of ``original image`` pairs, one per line."""
    return "".join(f"{a} {b}\n" for a, b in pairs)


def format_weights(weights: Mapping[int, float]) -> str:
    """``id weight`` lines in ascending id order (vertex-weight file layout)."""
    return "".join(f"{i} {_fmt(weights[i])}\n" for i in sorted(weights))
