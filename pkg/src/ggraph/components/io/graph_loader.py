import json
from typing import Any

from ggraph.components.graphs.graph import Graph, Vertex
from ggraph.exception import GraphIoError, SchemaError
from ggraph.logger_manager import LoggerManager

logging = LoggerManager.get_logger(__name__)


class GraphLoader:
    """
    Reads graphs written in the JSON graph schema

        {"group", "kind", "n", "vertices": [{"id", "label", "order"}], "edges": [[u, v], ...]}

    `group`, `kind` and the vertex labels/orders are optional on input; `n`
    and `edges` are required.
    """

    def load(self, file_path: str) -> Graph:
        logging.info(f"📂 Loading graph: {file_path}")
        try:
            with open(file_path, encoding="utf-8") as f:
                data = json.load(f)
        except OSError as e:
            raise GraphIoError(f"cannot read {file_path}: {e}") from e
        except json.JSONDecodeError as e:
            raise SchemaError(f"{file_path} is not valid JSON: {e}") from e
        return self.from_dict(data, source=file_path)

    def from_dict(self, data: Any, source: str = "<graph>") -> Graph:
        if not isinstance(data, dict):
            raise SchemaError(f"{source}: top level must be an object")
        n = data.get("n")
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise SchemaError(f"{source}: 'n' must be a non-negative integer")

        edges = data.get("edges")
        if not isinstance(edges, list):
            raise SchemaError(f"{source}: 'edges' must be a list of [u, v] pairs")
        pairs = []
        for e in edges:
            if (
                not isinstance(e, list)
                or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
            ):
                raise SchemaError(f"{source}: bad edge {e!r}")
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise SchemaError(f"{source}: edge {e!r} references a vertex outside 0..{n - 1}")
            if u == v:
                raise SchemaError(f"{source}: self-loop {e!r}")
            pairs.append((u, v))

        raw_vertices = data.get("vertices")
        if raw_vertices is None:
            raw_vertices = [{"id": i} for i in range(n)]
        if not isinstance(raw_vertices, list) or len(raw_vertices) != n:
            raise SchemaError(f"{source}: 'vertices' must list exactly n = {n} entries")
        vertices = []
        for i, raw in enumerate(raw_vertices):
            if not isinstance(raw, dict) or raw.get("id", i) != i:
                raise SchemaError(f"{source}: vertex {i} must be an object with id {i}")
            vertices.append(Vertex(i, str(raw.get("label", i)), int(raw.get("order", 0))))

        rows = [0] * n
        for u, v in pairs:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        logging.debug(f"🔍 {source}: {n} vertices, {len(pairs)} edges")
        return Graph(vertices, rows, name=str(data.get("group", "")), kind=str(data.get("kind", "")))
