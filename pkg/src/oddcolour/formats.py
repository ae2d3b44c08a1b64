"""Reading and writing graphs and results.

Edge-list format: a header line ``n m`` followed by ``m`` lines ``u v`` or
``u v w``; ``#`` starts a comment.  Labels that do not already lie in
``0..n-1`` are renumbered densely in increasing order.

JSON mirrors the in-memory types with sorted keys.  Infinite weights are
written as ``null``.
"""

from __future__ import annotations

import dataclasses
import json
import math
from enum import Enum

from .colouring import Check, Colouring, LiftReport
from .decomposition import Certificate, Decomposition
from .errors import BadWeight, DuplicateEdge, ParseError, SelfLoop
from .graph_core import SimpleGraph
from .parity import MembershipReport, OddCycleWitness
from .weighted import WEIGHTS, PathWitness, WeightedGraph, edge_key


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"{what} {tok!r} is not an integer") from None


def _parse_edgelist(text: str, weighted: bool | None):
    rows = list(_tokens(text))
    if not rows:
        raise ParseError(1, "missing header line 'n m'")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(lineno, "header must be 'n m'")
    n, m = (_int(x, lineno, "header value") for x in head)
    if n < 0 or m < 0:
        raise ParseError(lineno, "n and m must be non-negative")
    body = rows[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else (body[-1][0] if body else lineno) + 1
        raise ParseError(line, f"header announces {m} edges, found {len(body)}")
    if weighted is None:
        weighted = bool(body) and len(body[0][1]) == 3
    width = 3 if weighted else 2
    raw = []
    for ln, toks in body:
        if len(toks) != width:
            raise ParseError(ln, f"expected {width} fields, got {len(toks)}")
        u = _int(toks[0], ln, "vertex")
        v = _int(toks[1], ln, "vertex")
        w = _int(toks[2], ln, "weight") if weighted else None
        if weighted and w not in WEIGHTS:
            raise BadWeight(ln, f"weight {w} is not in {{3,4,5}}")
        raw.append((ln, u, v, w))
    labels = sorted({x for _, u, v, _ in raw for x in (u, v)})
    if labels and (labels[0] < 0 or labels[-1] >= n):
        if len(labels) > n:
            raise ParseError(lineno, f"{len(labels)} distinct labels exceed n = {n}")
        index = {x: i for i, x in enumerate(labels)}
    else:
        index = None
    seen = set()
    edges = []
    for ln, u, v, w in raw:
        if index is not None:
            u, v = index[u], index[v]
        if u == v:
            raise SelfLoop(ln, f"self-loop at {u}")
        key = edge_key(u, v)
        if key in seen:
            raise DuplicateEdge(ln, f"edge {key} listed twice")
        seen.add(key)
        edges.append((u, v, w))
    if weighted:
        return WeightedGraph.from_edges(n, edges)
    return SimpleGraph.from_edges(n, [(u, v) for u, v, _ in edges])


def _parse_json(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError(1, "JSON graph needs 'n' and 'edges'")
    n = data["n"]
    edges = [tuple(e) for e in data["edges"]]
    seen = set()
    for i, e in enumerate(edges, start=1):
        if len(e) not in (2, 3):
            raise ParseError(1, f"edge #{i} must have 2 or 3 entries")
        if e[0] == e[1]:
            raise SelfLoop(1, f"self-loop at {e[0]}")
        key = edge_key(e[0], e[1])
        if key in seen:
            raise DuplicateEdge(1, f"edge {key} listed twice")
        seen.add(key)
        if len(e) == 3 and e[2] not in WEIGHTS:
            raise BadWeight(1, f"weight {e[2]} is not in {{3,4,5}}")
    weighted = data.get("type") == "weighted_graph" or (edges and len(edges[0]) == 3)
    if weighted:
        tree = data.get("tree")
        return WeightedGraph.from_edges(n, edges, tree_edges=None if tree is None else [tuple(e) for e in tree])
    return SimpleGraph.from_edges(n, edges)


def parse_graph(text: bytes | str, format: str = "edgelist", weighted: bool | None = None):
    """Parse a graph; ``weighted=None`` detects weights from the first edge line."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError:
            raise ParseError(1, "input is not UTF-8") from None
    if format == "edgelist":
        return _parse_edgelist(text, weighted)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown format {format!r}")


def to_jsonable(obj):
    """Plain JSON data for the result types; sets become sorted lists."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return None if math.isinf(obj) or math.isnan(obj) else obj
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(x) for x in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, SimpleGraph):
        return {"type": "graph", "n": obj.n, "edges": [list(e) for e in obj.edges()]}
    if isinstance(obj, WeightedGraph):
        tree = None if obj.tree_edges is None else [list(e) for e in sorted(obj.tree_edges)]
        return {"type": "weighted_graph", "n": obj.n, "edges": [list(e) for e in obj.edges()], "tree": tree}
    if isinstance(obj, Colouring):
        return {"colours": list(obj.colour), "valid": obj.valid, "violating_edge": to_jsonable(obj.violating_edge)}
    if isinstance(obj, Decomposition):
        return {
            "B": sorted(obj.B),
            "certificates": to_jsonable(obj.certificates),
            "provenance": obj.provenance,
            "valid": obj.valid,
        }
    if isinstance(obj, (Certificate, Check)):
        return {"passed": obj.passed, "witness": to_jsonable(obj.witness)}
    if isinstance(obj, LiftReport):
        return {"A": sorted(obj.A), "A0": sorted(obj.A0), "X0": sorted(obj.X0), "checks": to_jsonable(obj.checks)}
    if isinstance(obj, (OddCycleWitness, PathWitness, MembershipReport)) or dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    return repr(obj)


def serialize(result, format: str | None = None) -> bytes:
    """Canonical bytes: edge lists for graphs (unless ``format='json'``), JSON otherwise."""
    if isinstance(result, (SimpleGraph, WeightedGraph)) and format in (None, "edgelist"):
        if isinstance(result, WeightedGraph):
            rows = [f"{u} {v} {w}" for u, v, w in result.edges()]
        else:
            rows = [f"{u} {v}" for u, v in result.edges()]
        return ("\n".join([f"{result.n} {len(rows)}", *rows]) + "\n").encode()
    if format not in (None, "json"):
        raise ValueError(f"format {format!r} only applies to graphs")
    return (json.dumps(to_jsonable(result), sort_keys=True, separators=(",", ":")) + "\n").encode()


__all__ = ["parse_graph", "serialize", "to_jsonable"]
