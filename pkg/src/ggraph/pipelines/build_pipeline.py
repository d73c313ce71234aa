from typing import Optional

from ggraph.components.graphs.export import FORMAT_SUFFIX, write_graph
from ggraph.components.graphs.graph import Graph
from ggraph.config.config import Config
from ggraph.logger_manager import LoggerManager
from ggraph.services.graph_service import GraphService
from ggraph.utils.path_utils import output_path

logging = LoggerManager.get_logger(__name__)


class BuildPipeline:
    """
    Builds one graph of one group and writes it as DOT, JSON or an edge CSV.
    """

    def __init__(self, graphs: Optional[GraphService] = None):
        self.config = Config()
        self.graphs = graphs or GraphService(self.config)

    async def run(
        self, spec: str, kind: str, fmt: str, out: Optional[str] = None, level: str = "element"
    ) -> tuple[Graph, str]:
        logging.info(f"🛠️ Building the {kind} graph of {spec} ({level} level)...")
        graph = self.graphs.graph(spec, kind, level)

        path = out or str(output_path(self.config.output_dir, f"{spec}_{kind}", FORMAT_SUFFIX[fmt]))
        write_graph(graph, fmt, path)

        print(f"{graph.name} {kind}: {graph.n} vertices, {graph.edge_count} edges -> {path}")
        logging.info("✅ Build pipeline complete.")
        return graph, path
