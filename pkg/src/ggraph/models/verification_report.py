import json
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any


class Outcome(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    DISCREPANCY = "DISCREPANCY"
    UNKNOWN = "UNKNOWN"


@dataclass
class Witness:
    group: str
    detail: str


@dataclass
class VerificationReport:
    """
    Outcome of one claim swept over a catalog. FAIL and DISCREPANCY always
    carry at least one witness; `observations` holds measured extremes such as
    the largest diameter seen.
    """

    claim_id: str
    instances: str
    outcome: Outcome
    witnesses: list[Witness] = field(default_factory=list)
    runtime_ms: int = 0
    checked: int = 0
    observations: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.outcome = Outcome(self.outcome)
        if self.outcome in (Outcome.FAIL, Outcome.DISCREPANCY) and not self.witnesses:
            raise ValueError(f"{self.claim_id}: {self.outcome.value} report without a witness")

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["outcome"] = self.outcome.value
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "VerificationReport":
        return cls(
            claim_id=data["claim_id"],
            instances=data["instances"],
            outcome=Outcome(data["outcome"]),
            witnesses=[Witness(**w) for w in data.get("witnesses", [])],
            runtime_ms=int(data.get("runtime_ms", 0)),
            checked=int(data.get("checked", 0)),
            observations=dict(data.get("observations", {})),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))
