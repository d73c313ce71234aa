from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterator, Optional

from sympy import factorint, primefactors
from sympy.utilities.iterables import partitions

from ggraph.config.config import Config
from ggraph.logger_manager import LoggerManager

logging = LoggerManager.get_logger(__name__)

# Z(m) x Q(2^n) cases checked for the small-diameter bound
CXQ_ODD_PARTS = (3, 5, 15, 21)
CXQ_QUATERNION_ORDERS = (8, 16)


@dataclass(frozen=True)
class CatalogEntry:
    """One group of a sweep: its spec string plus the family parameters that produced it."""

    spec: str
    family: str
    params: dict[str, Any] = field(default_factory=dict, hash=False, compare=False)

    @property
    def order(self) -> Optional[int]:
        return self.params.get("order")


def invariant_factors(shape: dict[int, list[int]]) -> list[int]:
    """
    Invariant factors d1 | d2 | ... from one partition of each prime exponent;
    `shape[p]` lists the parts for prime p in decreasing order.
    """
    length = max((len(parts) for parts in shape.values()), default=0)
    factors = []
    for i in range(length):
        d = 1
        for p, parts in shape.items():
            if i < len(parts):
                d *= p ** parts[i]
        factors.append(d)
    return sorted(factors)


def _exponent_partitions(e: int) -> list[list[int]]:
    # sympy reuses the yielded dict, so copy out each partition immediately
    out = []
    for part in partitions(e):
        parts = []
        for size, mult in sorted(part.items(), reverse=True):
            parts.extend([size] * mult)
        out.append(parts)
    return out


def abelian_spec(factors: list[int]) -> str:
    return " x ".join(f"Z({d})" for d in factors) if factors else "Z(1)"


class GroupCatalogService:
    """
    Enumerates the group catalogs the verification harness sweeps: every
    abelian group up to an order bound (one entry per isomorphism type, in
    invariant-factor form), named families and the configured explicit list.
    """

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()

    # === abelian sweep ===

    def abelian_of_order(self, n: int) -> Iterator[CatalogEntry]:
        fac = sorted(factorint(n).items())
        choices = [[(p, parts) for parts in _exponent_partitions(e)] for p, e in fac]
        for combo in product(*choices):
            shape = dict(combo)
            factors = invariant_factors(shape)
            yield CatalogEntry(
                spec=abelian_spec(factors),
                family="abelian",
                params={
                    "order": n,
                    "invariant_factors": factors,
                    "cyclic": len(factors) <= 1,
                    "primes": [p for p, _ in fac],
                    "shape": {p: list(parts) for p, parts in shape.items()},
                },
            )

    def abelian(self, max_order: Optional[int] = None, min_primes: int = 0) -> list[CatalogEntry]:
        bound = max_order if max_order is not None else self.config.abelian_max_order
        entries = [
            entry
            for n in range(1, bound + 1)
            if len(primefactors(n)) >= min_primes
            for entry in self.abelian_of_order(n)
        ]
        logging.debug(f"📚 abelian catalog up to order {bound}: {len(entries)} groups")
        return entries

    def abelian_p_groups(self, max_order: int = 256) -> list[CatalogEntry]:
        return [
            e
            for n in range(2, max_order + 1)
            if len(primefactors(n)) == 1
            for e in self.abelian_of_order(n)
        ]

    # === named families ===

    def cyclic(self, max_m: Optional[int] = None, start: int = 1) -> list[CatalogEntry]:
        bound = max_m if max_m is not None else self.config.family_max
        return [
            CatalogEntry(f"Z({m})", "cyclic", {"order": m, "m": m, "primes": sorted(primefactors(m))})
            for m in range(start, bound + 1)
        ]

    def dihedral(self, max_n: Optional[int] = None) -> list[CatalogEntry]:
        bound = max_n if max_n is not None else self.config.dihedral_max
        return [
            CatalogEntry(f"D({2 * n})", "dihedral", {"order": 2 * n, "n": n})
            for n in range(3, bound + 1)
        ]

    def quaternion(self, max_order: int = 64) -> list[CatalogEntry]:
        entries = []
        m = 8
        while m <= max_order:
            entries.append(CatalogEntry(f"Q({m})", "quaternion", {"order": m}))
            m *= 2
        return entries

    def cyclic_times_quaternion(
        self, odd_parts=CXQ_ODD_PARTS, quaternion_orders=CXQ_QUATERNION_ORDERS
    ) -> list[CatalogEntry]:
        return [
            CatalogEntry(f"Z({m}) x Q({q})", "cyclic_x_quaternion", {"order": m * q, "m": m, "q": q})
            for m in odd_parts
            for q in quaternion_orders
        ]

    def explicit(self) -> list[CatalogEntry]:
        return [CatalogEntry(spec, "explicit") for spec in self.config.explicit_groups]

    def p_groups(self) -> list[CatalogEntry]:
        """Abelian p-groups of order at most 256 followed by Q(8) .. Q(64)."""
        return self.abelian_p_groups(256) + self.quaternion(64)

    def full(self, max_order: Optional[int] = None) -> list[CatalogEntry]:
        """The abelian sweep plus every named family, without duplicate spec strings."""
        seen: set[str] = set()
        entries = []
        for entry in (
            self.abelian(max_order)
            + self.dihedral()
            + self.quaternion()
            + self.cyclic_times_quaternion()
            + self.explicit()
        ):
            if entry.spec not in seen:
                seen.add(entry.spec)
                entries.append(entry)
        return entries


def is_pq(m: int) -> bool:
    """m is a product of two distinct primes."""
    fac = factorint(m)
    return len(fac) == 2 and all(e == 1 for e in fac.values())
