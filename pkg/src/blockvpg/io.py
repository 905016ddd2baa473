"""Text formats: graph files, representation files, certificate files.

Graph files are line oriented: a header `p <n> <m>`, then exactly m lines
`e <u> <v>` with 1-indexed endpoints; `c ...` lines are comments. External
identifiers are 1-indexed everywhere; the library is 0-indexed internally
and conversion happens only here.
"""

from __future__ import annotations

import json

from .blocks import NotBlockGraphWitness
from .certify import Certificate
from .graphs import Graph, GraphInputError
from .grid import HORIZONTAL, VERTICAL, GridPath, GridRepresentation


class GraphFileError(ValueError):
    """Malformed graph, representation, or certificate file."""


def parse_graph_file(text: str) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFileError(f"line {lineno}: duplicate header")
            if len(parts) != 3:
                raise GraphFileError(f"line {lineno}: header must be 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFileError(f"line {lineno}: non-integer header fields") from None
            if n < 0 or m < 0:
                raise GraphFileError(f"line {lineno}: negative counts")
        elif parts[0] == "e":
            if n is None:
                raise GraphFileError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphFileError(f"line {lineno}: edge line must be 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFileError(f"line {lineno}: non-integer endpoints") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFileError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise GraphFileError(f"line {lineno}: self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFileError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFileError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphFileError("missing 'p <n> <m>' header")
    if m != len(edges):
        raise GraphFileError(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except GraphInputError as exc:
        raise GraphFileError(str(exc)) from None


def write_graph_file(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p {g.n} {g.m}")
    for u, v in sorted(g.edges):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def representation_to_json(rep: GridRepresentation) -> str:
    payload = {
        "grid": {"rows": rep.rows, "cols": rep.cols},
        "paths": [
            {"v": p.v + 1, "dir": p.orient, "line": p.line, "lo": p.lo, "hi": p.hi}
            for p in sorted(rep.paths, key=lambda p: p.v)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def representation_from_json(text: str) -> GridRepresentation:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFileError(f"invalid JSON: {exc}") from None
    try:
        rows = int(payload["grid"]["rows"])
        cols = int(payload["grid"]["cols"])
        entries = payload["paths"]
        paths = []
        seen = set()
        for entry in entries:
            v = int(entry["v"]) - 1
            orient = entry["dir"]
            line = int(entry["line"])
            lo = int(entry["lo"])
            hi = int(entry["hi"])
            if orient not in (HORIZONTAL, VERTICAL):
                raise GraphFileError(f"path for vertex {v + 1}: bad dir {orient!r}")
            if v in seen:
                raise GraphFileError(f"duplicate path for vertex {v + 1}")
            seen.add(v)
            paths.append(GridPath(v, orient, line, lo, hi))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFileError(f"malformed representation file: {exc}") from None
    if seen != set(range(len(paths))):
        raise GraphFileError("representation must cover vertices 1..n exactly once")
    try:
        return GridRepresentation(tuple(sorted(paths, key=lambda p: p.v)), rows=rows, cols=cols)
    except GraphInputError as exc:
        raise GraphFileError(str(exc)) from None


def certificate_to_json(cert: Certificate) -> str:
    payload = {
        "verdict": "reject",
        "family_k": cert.family_k,
        "vertices": [v + 1 for v in cert.vertices],
    }
    return json.dumps(payload, indent=2) + "\n"


def witness_to_json(witness: NotBlockGraphWitness) -> str:
    payload = {
        "verdict": "not_block_graph",
        "block": [v + 1 for v in witness.block],
        "nonadjacent": [witness.nonadjacent[0] + 1, witness.nonadjacent[1] + 1],
    }
    return json.dumps(payload, indent=2) + "\n"


def accept_to_json() -> str:
    return json.dumps({"verdict": "accept"}) + "\n"
