from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class PslNullVerdict:
    """
    Number-theoretic test for PSL(2,q): with d = gcd(q-1, 2), both (q-1)/d and
    (q+1)/d must be a prime power or a product of two distinct primes.
    A square p*p is already a prime power, so that reading changes no verdict.
    """

    q: int
    d: int
    lower: int
    lower_factors: dict[int, int]
    upper: int
    upper_factors: dict[int, int]
    predicate: bool
    note: str = "product of two primes read as two distinct primes; p*p is covered by the prime-power case"


@dataclass
class PslScanRow:
    q: int
    order: int
    predicate: bool
    computed_null: Optional[bool]
    difference_edges: Optional[int] = None
    error: Optional[str] = None
    verdict: Optional[PslNullVerdict] = field(default=None, repr=False)

    @property
    def agree(self) -> Optional[bool]:
        if self.computed_null is None:
            return None
        return self.predicate == self.computed_null
