import json
from typing import Any

from ggraph.components.divisors.sperner import embed_in_cyclic, graph_to_sperner
from ggraph.components.io.graph_loader import GraphLoader
from ggraph.config.config import Config
from ggraph.logger_manager import LoggerManager

logging = LoggerManager.get_logger(__name__)


class EmbedPipeline:
    """
    Reads a graph file and places the graph inside D(Z_n) for a squarefree n
    through its Sperner family of closed edge sets.
    """

    def __init__(self):
        self.config = Config()
        self.loader = GraphLoader()

    async def run(self, graph_file: str) -> dict[str, Any]:
        graph = self.loader.load(graph_file)
        logging.info(f"🧬 Embedding {graph.n} vertices and {graph.edge_count} edges into a cyclic group...")

        family = graph_to_sperner(graph)
        embedding = embed_in_cyclic(graph)
        report = {
            "graph": graph_file,
            "vertices": graph.n,
            "edges": graph.edge_count,
            "ground_set": len(family.ground_set),
            "sperner": family.is_sperner(),
        }
        report.update(embedding.to_dict())

        print(json.dumps(report, indent=2))
        verdict = "✅ verified" if embedding.verified else "❌ not verified"
        logging.info(f"{verdict}: induced copy in D(Z_n), n the product of {len(embedding.primes)} primes")
        return report
