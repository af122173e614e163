"""Text formats for hypergraphs and colorings, plus JSON report helpers.

Hypergraph file: one edge per line, vertices separated by whitespace, ``#``
starts a comment, blank lines are skipped. An optional ``vertices: ...``
line declares vertices that no edge covers.

Coloring file: ``vertex color`` per line, or a JSON object with a
``coloring`` mapping (as written by ``strongcolor color --format json``).
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Iterable, Optional

from strongcolor.errors import ParseError
from strongcolor.setfam import Hypergraph

HEADER = "vertices:"


def _ints(tokens, lineno):
    out = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}", lineno) from None
        if v < 0:
            raise ParseError(f"negative vertex id {v}", lineno)
        out.append(v)
    return out


def parse_hypergraph(text: str) -> Hypergraph:
    edges = []
    declared: list[int] = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith(HEADER):
            if seen_header:
                raise ParseError("duplicate vertices header", lineno)
            seen_header = True
            declared = _ints(line[len(HEADER):].split(), lineno)
            continue
        edges.append(_ints(line.split(), lineno))
    return Hypergraph.from_edges(edges, declared)


def serialize_hypergraph(H: Hypergraph, comments: Iterable[str] = ()) -> str:
    """Canonical text form; the header appears only when some vertex is uncovered."""
    lines = [f"# {c}" for c in comments]
    covered = {v for e in H.edges for v in e}
    if covered != set(H.vertices):
        lines.append(f"{HEADER} " + " ".join(map(str, H.vertices)))
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def read_hypergraph(path) -> Hypergraph:
    with open(path) as fh:
        return parse_hypergraph(fh.read())


def write_hypergraph(path, H: Hypergraph, comments: Iterable[str] = ()):
    with open(path, "w") as fh:
        fh.write(serialize_hypergraph(H, comments))


def parse_coloring(text: str) -> dict[int, int]:
    if text.lstrip().startswith("{"):
        return _coloring_from_json(text)
    C: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'vertex color'", lineno)
        v, c = _ints(parts, lineno)
        if c < 1:
            raise ParseError(f"color must be >= 1, got {c}", lineno)
        if v in C:
            raise ParseError(f"vertex {v} colored twice", lineno)
        C[v] = c
    return C


def _coloring_from_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.lineno) from None
    mapping = data.get("coloring", data) if isinstance(data, dict) else None
    if not isinstance(mapping, dict):
        raise ParseError("JSON coloring must be an object")
    try:
        C = {int(v): int(c) for v, c in mapping.items()}
    except (TypeError, ValueError):
        raise ParseError("JSON coloring keys and values must be integers") from None
    if any(v < 0 or c < 1 for v, c in C.items()):
        raise ParseError("JSON coloring has a negative vertex or a color below 1")
    return C


def serialize_coloring(C: dict[int, int]) -> str:
    return "".join(f"{v} {C[v]}\n" for v in sorted(C))


def read_coloring(path) -> dict[int, int]:
    with open(path) as fh:
        return parse_coloring(fh.read())


def coloring_json(C: dict[int, int]) -> dict[str, int]:
    return {str(v): C[v] for v in sorted(C)}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_schema(name: str = "report.schema.json") -> dict:
    return json.loads(resources.files("strongcolor").joinpath("schemas", name).read_text())


def report_document(kind: str, C: Optional[dict[int, int]] = None, report=None, **extra) -> dict:
    """JSON document emitted by the CLI; shape is fixed by the shipped schema."""
    doc = {"kind": kind}
    if C is not None:
        doc["coloring"] = coloring_json(C)
    if report is not None:
        doc["report"] = report.to_dict()
    doc.update(extra)
    return doc
