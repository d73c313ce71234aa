from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class FamilyFlags:
    is_chain: bool
    is_intersecting: bool
    is_sperner: bool
    weight: int

    @property
    def is_intersecting_sperner(self) -> bool:
        return self.is_intersecting and self.is_sperner


@dataclass
class DivisorCliqueResult:
    """
    Optimum of a divisor-family search on Z(n). For the difference kind
    `value`/`witness` use the cardinality objective and `weighted_value` /
    `weighted_witness` hold the sum-of-totients objective.
    """

    n: int
    kind: str
    value: int
    witness: list[int]
    weighted_value: Optional[int] = None
    weighted_witness: Optional[list[int]] = None
    divisor_count: int = 0

    def to_dict(self) -> dict[str, Any]:
        data = {
            "n": self.n,
            "kind": self.kind,
            "value": self.value,
            "witness": self.witness,
            "divisors": self.divisor_count,
        }
        if self.weighted_value is not None:
            data["weighted_value"] = self.weighted_value
            data["weighted_witness"] = self.weighted_witness
        return data


@dataclass
class CyclicEmbedding:
    """
    A graph placed inside D(Z_n) for squarefree n: each ground-set member owns
    a prime and vertex v maps to the product of the primes of its set. `n`
    itself is never formed; `divisors[v]` is the bitmask of primes used.
    """

    ground_set: list[Any]
    primes: list[int]
    divisors: list[int]
    verified: bool
    mismatches: list[tuple[int, int]] = field(default_factory=list)

    def divisor_primes(self, v: int) -> list[int]:
        return [p for i, p in enumerate(self.primes) if self.divisors[v] >> i & 1]

    def divisor_value(self, v: int) -> int:
        value = 1
        for p in self.divisor_primes(v):
            value *= p
        return value

    def to_dict(self) -> dict[str, Any]:
        return {
            "assignment": [
                {"member": str(member), "prime": p} for member, p in zip(self.ground_set, self.primes)
            ],
            "divisors": [
                {"vertex": v, "primes": self.divisor_primes(v)} for v in range(len(self.divisors))
            ],
            "verified": self.verified,
            "mismatches": [list(pair) for pair in self.mismatches],
        }
