"""Graph serialization: DIMACS ``.col``, a small JSON schema, and DOT."""
from __future__ import annotations

import json
from typing import Hashable

from .errors import InvalidInput
from .graph import Graph


def to_dimacs(g: Graph) -> str:
    lines = []
    if g.family:
        params = " ".join(f"{k}={v}" for k, v in sorted(g.params.items()))
        lines.append(f"c {g.family} {params}".rstrip())
    lines.append(f"p edge {g.vertex_count} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise InvalidInput(f"line {lineno}: bad problem line {line!r}")
                n, m = int(parts[2]), int(parts[3])
            elif parts[0] == "e":
                if n is None:
                    raise InvalidInput(f"line {lineno}: edge before problem line")
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise InvalidInput(f"line {lineno}: unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidInput(f"line {lineno}: cannot parse {line!r}") from exc
    if n is None:
        raise InvalidInput("missing 'p edge' header")
    try:
        g = Graph.from_edges(n, edges)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    if g.edge_count != m:
        raise InvalidInput(f"header declares {m} edges, found {g.edge_count} distinct")
    return g


def to_json_obj(g: Graph) -> dict:
    return {
        "family": g.family,
        "params": dict(sorted(g.params.items())),
        "n": g.vertex_count,
        "edges": [list(e) for e in g.edges],
    }


def to_json(g: Graph) -> str:
    return json.dumps(to_json_obj(g))


def from_json_obj(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
        return Graph.from_edges(n, edges, family=obj.get("family"), params=obj.get("params") or {})
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"bad graph JSON: {exc}") from exc


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"bad graph JSON: {exc}") from exc
    return from_json_obj(obj)


def format_label(label: Hashable, family: str | None = None) -> str:
    if isinstance(label, tuple):
        if family in ("web", "wheel"):
            return "v{},{}".format(*label)
        return "(" + ",".join(str(x) for x in label) + ")"
    return f"v{label}"


def to_dot(g: Graph, name: str | None = None) -> str:
    title = name or g.family or "G"
    lines = [f"graph {title} {{"]
    for v in range(g.vertex_count):
        lines.append(f'  {v} [label="{format_label(g.label(v), g.family)}"];')
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_dot(text: str) -> Graph:
    """Read back the subset of DOT that :func:`to_dot` writes."""
    nodes = set()
    edges = []
    for raw in text.splitlines():
        line = raw.strip().rstrip(";")
        if "--" in line:
            a, b = (s.strip() for s in line.split("--"))
            edges.append((int(a), int(b)))
        elif line and line[0].isdigit():
            nodes.add(int(line.split()[0]))
    if not nodes:
        raise InvalidInput("no nodes found in DOT input")
    return Graph.from_edges(max(nodes) + 1, edges)


READERS = {"dimacs": from_dimacs, "json": from_json, "dot": from_dot}
WRITERS = {"dimacs": to_dimacs, "json": to_json, "dot": to_dot}


def read_graph(text: str, fmt: str | None = None) -> Graph:
    if fmt is None:
        stripped = text.lstrip()
        fmt = "json" if stripped.startswith("{") else "dot" if stripped.startswith("graph") else "dimacs"
    return READERS[fmt](text)
