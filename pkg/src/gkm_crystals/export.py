"""Deterministic DOT and JSON output for crystal graphs, and JSON read-back."""
from __future__ import annotations

import json
from typing import Mapping

from . import extint
from .cartan import BorcherdsCartanDatum, Weight, dominant_weight, pair, validate_datum
from .crystal import CrystalGraph, NodeData
from .errors import UnknownFormat
from .highest_weight import BInfElement, HighestWeightCrystal, make_iota
from .models import C_ELEMENT, Letter, TElement
from .tensor import TensorElement

GRAPH_FORMAT = "gkm-crystal-graph/1"


def _fmt_vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _weight_label(datum: BorcherdsCartanDatum, w: Weight) -> str:
    return "wt=" + _fmt_vec(pair(datum, w, i) for i in datum.indices) + " alpha=" + _fmt_vec(w.root)


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for b in g.sorted_nodes():
        attrs = f'label="{_dot_escape(_weight_label(g.datum, g.nodes[b].wt))}"'
        if b in g.truncated_frontier:
            attrs += ", style=dashed"
        lines.append(f'  "{_dot_escape(g.node_id(b))}" [{attrs}];')
    for s, i, t in g.sorted_edges():
        lines.append(f'  "{_dot_escape(g.node_id(s))}" -> "{_dot_escape(g.node_id(t))}" [label="{_dot_escape(g.datum.label(i))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _element_json(g: CrystalGraph, b):
    if g.crystal is not None:
        return g.crystal.element_to_json(b)
    return None


def to_json_doc(g: CrystalGraph) -> dict:
    labels = g.datum.labels
    nodes = []
    for b in g.sorted_nodes():
        data = g.nodes[b]
        nodes.append({
            "id": g.node_id(b),
            "element": _element_json(g, b),
            "weight": {"base": list(data.wt.base), "root": list(data.wt.root)},
            "eps": {labels[i]: extint.to_json(v) for i, v in enumerate(data.eps)},
            "phi": {labels[i]: extint.to_json(v) for i, v in enumerate(data.phi)},
            "truncated": b in g.truncated_frontier,
        })
    edges = [{"source": g.node_id(s), "index": labels[i], "target": g.node_id(t)} for s, i, t in g.sorted_edges()]
    return {
        "format": GRAPH_FORMAT,
        "datum": g.datum.to_json(),
        "meta": dict(sorted(g.meta.items())),
        "seed": g.node_id(g.seed) if g.nodes else None,
        "depth_bound": g.depth_bound,
        "truncated": g.truncated,
        "node_count": len(nodes),
        "edge_count": len(edges),
        "nodes": nodes,
        "edges": edges,
    }


def export_graph(g: CrystalGraph, fmt: str = "json") -> bytes:
    """Serialize ``g`` as ``dot`` or ``json``; equal graphs give identical bytes."""
    if fmt == "dot":
        return to_dot(g).encode("utf-8")
    if fmt == "json":
        return (json.dumps(to_json_doc(g), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    raise UnknownFormat(f"unknown export format {fmt!r} (expected 'dot' or 'json')")


# ----------------------------------------------------------------- read-back


def element_from_json(datum: BorcherdsCartanDatum, doc):
    """Rebuild a structured element description written by ``element_to_json``."""
    if isinstance(doc, Mapping) and "slots" in doc and "lambda" in doc:
        weight = dominant_weight(datum, doc["lambda"])
        return TensorElement((_binf(doc["slots"]), TElement(weight), C_ELEMENT))
    kind = doc.get("type") if isinstance(doc, Mapping) else None
    if kind == "c":
        return C_ELEMENT
    if kind == "t":
        return TElement(dominant_weight(datum, doc["lambda"]))
    if kind == "b":
        return Letter(datum.index(str(doc["index"])), int(doc["n"]))
    if kind == "inf":
        return _binf(doc["slots"])
    if kind == "tensor":
        return TensorElement(tuple(element_from_json(datum, f) for f in doc["factors"]))
    raise ValueError(f"cannot parse element {doc!r}")


def _binf(slots: Mapping) -> BInfElement:
    return BInfElement(tuple(sorted((int(p), int(n)) for p, n in slots.items())))


def graph_from_json(doc: Mapping) -> CrystalGraph:
    """Parse a document produced by :func:`export_graph` back into a graph.

    Node statistics and edges are taken from the document as written, so a
    tampered document yields a tampered graph.  Highest-weight graphs get their
    crystal reattached (``meta`` carries ``lambda`` and ``iota``).
    """
    if doc.get("format") != GRAPH_FORMAT:
        raise ValueError(f"not a {GRAPH_FORMAT} document")
    d = doc["datum"]
    datum = validate_datum(d["matrix"], d["labels"])
    meta = dict(doc.get("meta", {}))
    crystal = None
    if "lambda" in meta:
        crystal = HighestWeightCrystal(datum, dominant_weight(datum, meta["lambda"]), make_iota(datum, meta.get("iota")))
    by_id = {}
    g = CrystalGraph(datum, None, int(doc["depth_bound"]), crystal=crystal, meta=meta)
    for node in doc["nodes"]:
        b = element_from_json(datum, node["element"])
        by_id[node["id"]] = b
        g.nodes[b] = NodeData(
            Weight(tuple(node["weight"]["base"]), tuple(node["weight"]["root"])),
            tuple(extint.from_json(node["eps"][lab]) for lab in datum.labels),
            tuple(extint.from_json(node["phi"][lab]) for lab in datum.labels),
        )
        if node.get("truncated"):
            g.truncated_frontier.add(b)
    g.seed = by_id.get(doc.get("seed"))
    for e in doc["edges"]:
        g.edges.append((by_id[e["source"]], datum.index(str(e["index"])), by_id[e["target"]]))
    return g
