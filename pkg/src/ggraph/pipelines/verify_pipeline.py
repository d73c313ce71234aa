import os
from typing import Iterable, Optional

import pandas as pd

from ggraph.components.claims.registry import get_claim, resolve_claims
from ggraph.config.config import Config
from ggraph.exception import EXIT_BUDGET_EXHAUSTED, EXIT_CLAIM_FAILED, EXIT_OK, GraphIoError
from ggraph.logger_manager import LoggerManager
from ggraph.models.verification_report import Outcome, VerificationReport
from ggraph.services.graph_service import GraphService
from ggraph.services.group_catalog_service import GroupCatalogService
from ggraph.utils.path_utils import output_path

logging = LoggerManager.get_logger(__name__)


def exit_code_for(outcomes: Iterable[Outcome], allow_discrepancy: bool) -> int:
    """
    0 when every outcome is PASS (or DISCREPANCY, if acknowledged); a FAIL
    gives 1, otherwise an UNKNOWN gives 3.
    """
    outcomes = set(outcomes)
    if Outcome.FAIL in outcomes:
        return EXIT_CLAIM_FAILED
    if Outcome.UNKNOWN in outcomes:
        return EXIT_BUDGET_EXHAUSTED
    if Outcome.DISCREPANCY in outcomes and not allow_discrepancy:
        return EXIT_CLAIM_FAILED
    return EXIT_OK


def write_report(report: VerificationReport, directory: str) -> str:
    path = str(output_path(directory, report.claim_id, ".json"))
    try:
        os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(report.to_json() + "\n")
    except OSError as e:
        raise GraphIoError(f"cannot write {path}: {e}") from e
    logging.info(f"💾 Wrote report to {path}")
    return path


def summary_frame(reports: list[VerificationReport]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "claim": r.claim_id,
                "outcome": r.outcome.value,
                "checked": r.checked,
                "witnesses": len(r.witnesses),
                "runtime_ms": r.runtime_ms,
            }
            for r in reports
        ]
    )


class VerifyPipeline:
    """
    Sweeps one claim, a comma-separated list, or `all` registered claims over
    their catalogs and writes one JSON report per claim.
    """

    def __init__(
        self,
        graphs: Optional[GraphService] = None,
        catalog: Optional[GroupCatalogService] = None,
    ):
        self.config = Config()
        self.graphs = graphs or GraphService(self.config)
        self.catalog = catalog or GroupCatalogService(self.config)
        self.reports: list[VerificationReport] = []

    async def run(self, requested: str) -> int:
        claim_ids = resolve_claims(requested)
        logging.info(f"🔎 Starting verification of {len(claim_ids)} claim(s): {', '.join(claim_ids)}")

        self.reports = []
        for claim_id in claim_ids:
            claim = get_claim(claim_id, self.config, self.graphs, self.catalog)
            report = claim.evaluate()
            write_report(report, self.config.REPORTS_DIR)
            for w in report.witnesses:
                logging.info(f"   ↳ {report.outcome.value} {w.group}: {w.detail}")
            self.reports.append(report)

        print(summary_frame(self.reports).to_string(index=False))
        code = exit_code_for((r.outcome for r in self.reports), self.config.allow_discrepancy)
        logging.info(f"✅ Verification complete (exit code {code}).")
        return code
