import io
import json
import os
from typing import Any

import graphviz
import pandas as pd

from ggraph.components.graphs.graph import Graph
from ggraph.exception import GraphIoError, InvalidParameter
from ggraph.logger_manager import LoggerManager

logging = LoggerManager.get_logger(__name__)

EXPORT_FORMATS = ("dot", "json", "edge-csv")
FORMAT_SUFFIX = {"dot": ".dot", "json": ".json", "edge-csv": ".csv"}


def to_json_dict(graph: Graph) -> dict[str, Any]:
    return {
        "group": graph.name,
        "kind": graph.kind,
        "n": graph.n,
        "vertices": [
            {"id": v.id, "label": v.label, "order": v.order} for v in graph.vertices
        ],
        "edges": [[u, v] for u, v in graph.edges()],
    }


def to_dot(graph: Graph) -> graphviz.Graph:
    dot = graphviz.Graph(name=graph.kind or "graph", comment=f"{graph.kind} graph of {graph.name}")
    dot.attr("node", shape="ellipse", fontname="Helvetica")
    for v in graph.vertices:
        dot.node(str(v.id), f"{v.label}\\no={v.order}")
    for u, v in graph.edges():
        dot.edge(str(u), str(v))
    return dot


def to_edge_frame(graph: Graph) -> pd.DataFrame:
    return pd.DataFrame(graph.edges(), columns=["u", "v"])


def export(graph: Graph, fmt: str) -> bytes:
    """Deterministic serialisation; every format lists edges in the same lexicographic order."""
    if fmt == "json":
        return (json.dumps(to_json_dict(graph), indent=2) + "\n").encode("utf-8")
    if fmt == "dot":
        return to_dot(graph).source.encode("utf-8")
    if fmt == "edge-csv":
        buffer = io.StringIO()
        to_edge_frame(graph).to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue().encode("utf-8")
    raise InvalidParameter(f"unknown format {fmt!r}; expected one of {', '.join(EXPORT_FORMATS)}")


def write_graph(graph: Graph, fmt: str, path: str) -> str:
    payload = export(graph, fmt)
    try:
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(path, "wb") as f:
            f.write(payload)
    except OSError as e:
        raise GraphIoError(f"cannot write {path}: {e}") from e
    logging.info(f"💾 Wrote {fmt} graph to {path}")
    return path
