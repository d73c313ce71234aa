from typing import Optional

from ggraph.components.claims.simple_group_claims import M11Claim
from ggraph.components.graphs.export import FORMAT_SUFFIX, write_graph
from ggraph.config.config import Config
from ggraph.logger_manager import LoggerManager
from ggraph.models.verification_report import VerificationReport
from ggraph.pipelines.verify_pipeline import write_report
from ggraph.services.graph_service import GraphService
from ggraph.utils.path_utils import output_path

logging = LoggerManager.get_logger(__name__)


class M11Pipeline:
    """
    Runs the M11 reduction, writes its report and the reduced graph as JSON
    and DOT.
    """

    def __init__(self, graphs: Optional[GraphService] = None):
        self.config = Config()
        self.graphs = graphs or GraphService(self.config)

    async def run(self) -> VerificationReport:
        logging.info("🧩 Starting M11 pipeline...")
        claim = M11Claim(self.config, self.graphs)
        report = claim.evaluate()
        write_report(report, self.config.REPORTS_DIR)

        if claim.reduced is not None:
            for fmt in ("json", "dot"):
                path = output_path(self.config.output_dir, "M11_reduced", FORMAT_SUFFIX[fmt])
                write_graph(claim.reduced, fmt, str(path))

        print(report.to_json())
        logging.info(f"✅ M11 pipeline complete: {report.outcome.value}")
        return report
