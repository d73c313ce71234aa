import os
from typing import Optional

import pandas as pd

from ggraph.config.config import Config
from ggraph.exception import GraphIoError
from ggraph.logger_manager import LoggerManager
from ggraph.services.graph_service import GraphService
from ggraph.services.simple_group_service import DEFAULT_PSL_SCAN, SimpleGroupService

logging = LoggerManager.get_logger(__name__)

SCAN_FILE = "psl_scan.csv"


class PslScanPipeline:
    """
    Compares edgelessness of D_undeleted(PSL(2,q)) with the number-theoretic
    predicate on (q-1)/d and (q+1)/d, writing the table as CSV.
    """

    def __init__(self, graphs: Optional[GraphService] = None):
        self.config = Config()
        self.service = SimpleGroupService(self.config, graphs)
        self.disagreements: list[int] = []

    async def run(self) -> pd.DataFrame:
        q_list = [q for q in DEFAULT_PSL_SCAN if q <= self.config.psl_qmax]
        logging.info(f"🔭 Scanning PSL(2,q) for q in {q_list}...")
        rows = self.service.psl2_nullness_scan(q_list)
        frame = self.service.scan_frame(rows)

        path = os.path.join(self.config.REPORTS_DIR, SCAN_FILE)
        try:
            os.makedirs(self.config.REPORTS_DIR, exist_ok=True)
            frame.to_csv(path, index=False, lineterminator="\n")
        except OSError as e:
            raise GraphIoError(f"cannot write {path}: {e}") from e

        print(frame.to_string(index=False))
        self.disagreements = [r.q for r in rows if r.agree is False]
        if self.disagreements:
            logging.error(f"❌ predicate and computation disagree for q in {self.disagreements}")
        logging.info(f"✅ PSL scan complete; table written to {path}")
        return frame
