import json
from typing import Any, Optional

from ggraph.components.analysis.cograph import is_cograph
from ggraph.components.graphs.constructors import class_graph
from ggraph.config.config import Config
from ggraph.logger_manager import LoggerManager
from ggraph.services.graph_service import GraphService

logging = LoggerManager.get_logger(__name__)


class AnalyzePipeline:
    """
    Measures one graph (components, diameter, girth, bipartiteness, degree
    parity) and prints the result as JSON.
    """

    def __init__(self, graphs: Optional[GraphService] = None):
        self.config = Config()
        self.graphs = graphs or GraphService(self.config)

    async def run(self, spec: str, kind: str) -> dict[str, Any]:
        logging.info(f"📏 Analysing the {kind} graph of {spec}...")
        lattice = self.graphs.lattice(spec)
        result = self.graphs.analyze(spec, kind)

        report = {"group": lattice.group.name, "order": lattice.group.order, "kind": kind}
        report.update(result.to_dict())
        if kind == "power":
            # closed twins, so the quotient decides
            report["cograph"] = is_cograph(class_graph(lattice, kind)).is_cograph

        print(json.dumps(report, indent=2))
        logging.info("✅ Analysis complete.")
        return report
