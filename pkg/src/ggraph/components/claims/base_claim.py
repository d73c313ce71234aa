import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, Optional

from tqdm import tqdm

from ggraph.config.config import Config
from ggraph.exception import BudgetExceeded, OrderLimitExceeded, VertexCapExceeded
from ggraph.logger_manager import LoggerManager
from ggraph.models.verification_report import Outcome, VerificationReport, Witness
from ggraph.services.graph_service import GraphService
from ggraph.services.group_catalog_service import CatalogEntry, GroupCatalogService

logging = LoggerManager.get_logger(__name__)

MAX_WITNESSES = 20


@dataclass
class Finding:
    """A non-PASS result for one catalog instance."""

    outcome: Outcome
    group: str
    detail: str


class BaseClaim(ABC):
    """
    Abstract base class for theorem checks.

    A claim names the catalog it sweeps and checks one instance at a time;
    `evaluate` runs the sweep and folds the per-instance findings into a
    VerificationReport.
    """

    claim_id: str = ""
    statement: str = ""
    on_demand: bool = False

    def __init__(
        self,
        config: Optional[Config] = None,
        graphs: Optional[GraphService] = None,
        catalog: Optional[GroupCatalogService] = None,
    ):
        self.config = config or Config()
        self.graphs = graphs or GraphService(self.config)
        self.catalog = catalog or GroupCatalogService(self.config)
        self.observations: dict[str, Any] = {}

    @abstractmethod
    def instances(self) -> list[CatalogEntry]:
        """
        The catalog swept by this claim, in the order witnesses are reported.
        """
        pass

    @abstractmethod
    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        """
        Evaluates the claim on one instance.

        Returns:
            Optional[Finding]: None when the instance agrees with the claim.
        """
        pass

    @abstractmethod
    def instance_range(self) -> str:
        """Human-readable description of the swept catalog."""
        pass

    def conclude(self) -> list[Finding]:
        """Findings that only the whole sweep can produce; none by default."""
        return []

    # === helpers for subclasses ===

    def fail(self, entry: CatalogEntry, detail: str) -> Finding:
        return Finding(Outcome.FAIL, entry.spec, detail)

    def discrepancy(self, entry: CatalogEntry, detail: str) -> Finding:
        return Finding(Outcome.DISCREPANCY, entry.spec, detail)

    def observe_max(self, key: str, value: Optional[int], family: Optional[str] = None):
        if value is None:
            return
        if family is None:
            self.observations[key] = max(self.observations.get(key, value), value)
            return
        per_family = self.observations.setdefault(key, {})
        per_family[family] = max(per_family.get(family, value), value)

    def observe_count(self, key: str, amount: int = 1):
        self.observations[key] = self.observations.get(key, 0) + amount

    def observe_item(self, key: str, item: Any):
        self.observations.setdefault(key, []).append(item)

    # === sweep ===

    def evaluate(self) -> VerificationReport:
        logging.info(f"🔎 Verifying {self.claim_id}: {self.statement}")
        started = time.perf_counter()
        self.observations = {}
        entries = self.instances()
        findings: list[Finding] = []
        checked = 0
        for entry in tqdm(
            entries,
            desc=f"🔎 {self.claim_id}",
            unit="group",
            disable=not self.config.show_progress,
        ):
            try:
                finding = self.check(entry)
            except BudgetExceeded as e:
                logging.warning(f"⏳ {self.claim_id} on {entry.spec}: {e}")
                finding = Finding(Outcome.UNKNOWN, entry.spec, str(e))
            except (OrderLimitExceeded, VertexCapExceeded) as e:
                logging.warning(f"⚠️ {self.claim_id} skipped {entry.spec}: {e}")
                self.observe_item("skipped", entry.spec)
                continue
            checked += 1
            if finding is not None:
                logging.debug(f"{finding.outcome.value} {self.claim_id} on {finding.group}: {finding.detail}")
                findings.append(finding)
        findings.extend(self.conclude())

        outcome = aggregate([f.outcome for f in findings])
        witnesses = [
            Witness(f.group, f.detail) for f in _ranked(findings) if f.outcome is not Outcome.UNKNOWN
        ][:MAX_WITNESSES]
        if outcome is Outcome.UNKNOWN:
            self.observations["unknown"] = [f"{f.group}: {f.detail}" for f in findings if f.outcome is Outcome.UNKNOWN]
        report = VerificationReport(
            claim_id=self.claim_id,
            instances=self.instance_range(),
            outcome=outcome,
            witnesses=witnesses,
            runtime_ms=int((time.perf_counter() - started) * 1000),
            checked=checked,
            observations=self.observations,
        )
        log = logging.info if report.passed else logging.warning
        log(f"📋 {self.claim_id}: {report.outcome.value} over {checked} instance(s) in {report.runtime_ms} ms")
        return report


def aggregate(outcomes: Iterable[Outcome]) -> Outcome:
    """FAIL dominates, then UNKNOWN, then DISCREPANCY; no findings means PASS."""
    seen = set(outcomes)
    for outcome in (Outcome.FAIL, Outcome.UNKNOWN, Outcome.DISCREPANCY):
        if outcome in seen:
            return outcome
    return Outcome.PASS


def _ranked(findings: list[Finding]) -> list[Finding]:
    rank = {Outcome.FAIL: 0, Outcome.DISCREPANCY: 1, Outcome.UNKNOWN: 2}
    return sorted(findings, key=lambda f: rank[f.outcome])
