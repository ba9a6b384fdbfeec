"""JSON, edge-list and DOT formats.

Documents use 0-based vertex indices.  Human-facing labels are 1-based and
travel in the ``labels`` field; for grids they read ``(i,j)`` as in the
figures.  The JSON Schema files live in ``pmdkit/schemas``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Iterable, Sequence

from .covers import CoverSolution
from .errors import InvalidInput
from .graphs import Edge, Graph, MultiGraph, norm_edge
from .positivity import WeightCertificate
from .solver import Decomposition

SCHEMAS = ("graph", "multigraph", "decomposition", "latin", "cover", "certificate", "report")

_PALETTE = ("red", "blue", "forestgreen", "orange", "purple", "brown", "magenta", "cyan", "gold", "gray")


def schema(name: str) -> dict:
    if name not in SCHEMAS:
        raise InvalidInput(f"unknown schema {name!r}")
    text = resources.files("pmdkit").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def display_labels(g: Graph) -> list[str]:
    return list(g.labels) if g.labels else [str(v + 1) for v in range(g.n)]


# ----------------------------------------------------------------- graphs


def graph_to_json(g: Graph) -> dict:
    doc: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return doc


def graph_from_json(doc: dict) -> Graph:
    try:
        return Graph(int(doc["n"]), tuple(norm_edge(e) for e in doc["edges"]), doc.get("labels"))
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed graph document: {exc}") from exc


def multigraph_to_json(mg: MultiGraph) -> dict:
    return {"n": mg.n, "edges": [list(e) for e in mg.mult], "mult": list(mg.mult.values())}


def multigraph_from_json(doc: dict) -> MultiGraph:
    edges = [norm_edge(e) for e in doc["edges"]]
    mult = doc.get("mult", [1] * len(edges))
    if len(mult) != len(edges):
        raise InvalidInput("mult must be parallel to edges")
    out: dict[Edge, int] = {}
    for e, k in zip(edges, mult):
        out[e] = out.get(e, 0) + int(k)
    return MultiGraph(int(doc["n"]), out)


def parse_edge_list(text: str) -> Graph:
    """``u v`` per line, 0-based; ``#`` starts a comment; a lone integer line fixes the vertex count."""
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        try:
            nums = [int(t) for t in line]
        except ValueError as exc:
            raise InvalidInput(f"bad edge-list line {raw!r}") from exc
        if len(nums) == 1 and n is None and not edges:
            n = nums[0]
        elif len(nums) == 2:
            edges.append(norm_edge(nums))
        else:
            raise InvalidInput(f"bad edge-list line {raw!r}")
    if n is None:
        n = 1 + max((v for e in edges for v in e), default=-1)
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges])


# ---------------------------------------------------------- decompositions


def certificate_to_json(c: WeightCertificate) -> dict:
    return c.to_json()


def certificate_from_json(doc: dict) -> WeightCertificate:
    return WeightCertificate.from_json(doc)


def decomposition_to_json(d: Decomposition) -> dict:
    doc = {"graph": graph_to_json(d.graph), "parts": [[list(e) for e in p] for p in d.parts]}
    if d.certificates is not None:
        doc["certificates"] = [c.to_json() for c in d.certificates]
    return doc


def decomposition_from_json(doc: dict, graph: Graph | None = None) -> Decomposition:
    g = graph if graph is not None else graph_from_json(doc["graph"])
    parts = tuple(tuple(norm_edge(e) for e in p) for p in doc["parts"])
    certs = doc.get("certificates")
    certs = tuple(WeightCertificate.from_json(c) for c in certs) if certs is not None else None
    return Decomposition(g, parts, certs)


def latin_to_json(rows: Sequence[Sequence[int]]) -> dict:
    return {"rows": [list(r) for r in rows], "symbols": max((x for r in rows for x in r), default=0)}


def latin_from_json(doc: dict) -> list[list[int]]:
    return [[int(x) for x in r] for r in doc["rows"]]


def cover_to_json(c: CoverSolution) -> dict:
    return c.to_json()


def cover_from_json(doc: dict, graph: Graph, family, n: int) -> CoverSolution:
    return CoverSolution.from_json(doc, graph, family, n)


# -------------------------------------------------------------------- DOT


def to_dot(g: Graph, parts: Iterable[Iterable[Edge]] | None = None, name: str = "G") -> str:
    """DOT text; with ``parts`` each edge is coloured and labelled by its 1-based part number."""
    labels = display_labels(g)
    owner: dict[Edge, int] = {}
    if parts is not None:
        for i, p in enumerate(parts):
            for e in p:
                owner[norm_edge(e)] = i
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v in range(g.n):
        lines.append(f'  v{v} [label="{labels[v]}"];')
    for u, v in g.edges:
        if (u, v) in owner:
            i = owner[(u, v)]
            lines.append(f'  v{u} -- v{v} [label="{i + 1}", color="{_PALETTE[i % len(_PALETTE)]}"];')
        else:
            lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


__all__ = [
    "SCHEMAS",
    "certificate_from_json",
    "certificate_to_json",
    "cover_from_json",
    "cover_to_json",
    "decomposition_from_json",
    "decomposition_to_json",
    "display_labels",
    "format_edge_list",
    "graph_from_json",
    "graph_to_json",
    "latin_from_json",
    "latin_to_json",
    "multigraph_from_json",
    "multigraph_to_json",
    "parse_edge_list",
    "schema",
    "to_dot",
]
