import json
from typing import Any, Optional

from ggraph.components.analysis.cliques import class_clique
from ggraph.components.divisors.divisor_lattice import omega_via_divisors
from ggraph.config.config import Config
from ggraph.exception import InvalidParameter
from ggraph.logger_manager import LoggerManager
from ggraph.services.graph_service import GraphService

logging = LoggerManager.get_logger(__name__)

EXACT_CHECK_MAX = 2000


class CliquePipeline:
    """
    Clique number of a graph on Z(n) from the divisor lattice of n, checked
    against an exact clique search on the generator classes for small n.
    """

    def __init__(self, graphs: Optional[GraphService] = None):
        self.config = Config()
        self.graphs = graphs or GraphService(self.config)

    async def run(self, n: int, kind: str) -> dict[str, Any]:
        if n < 1:
            raise InvalidParameter(f"clique needs n >= 1, got {n}")
        logging.info(f"🔺 Divisor search for the {kind} clique number of Z({n})...")
        result = omega_via_divisors(n, kind, self.config.search_budget)
        report = result.to_dict()

        if n <= EXACT_CHECK_MAX:
            lattice = self.graphs.lattice(f"Z({n})")
            clique = class_clique(lattice, kind, self.config.search_budget)
            report["exact"] = len(clique)
            report["exact_clique"] = clique
            report["agrees"] = len(clique) == result.value
            if not report["agrees"]:
                logging.warning(f"⚠️ divisor optimum {result.value} but the exact clique number is {len(clique)}")
        else:
            logging.info(f"ℹ️ n > {EXACT_CHECK_MAX}: exact cross-check skipped")

        print(json.dumps(report, indent=2))
        logging.info("✅ Clique search complete.")
        return report
