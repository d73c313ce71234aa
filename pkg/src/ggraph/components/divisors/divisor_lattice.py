"""
Divisors of n as exponent vectors over n's prime factorisation, families of
divisors and the clique searches they support on cyclic groups.

In Z(n) the elements of order s form one generator class of size phi(s), so
a set S of divisors stands for the element set C(S) and adjacency between
elements of different orders depends on the orders alone.
"""

from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from sympy import factorint

from ggraph.components.analysis.cliques import max_weight_clique
from ggraph.exception import InvalidParameter, TooManyDivisors
from ggraph.logger_manager import LoggerManager
from ggraph.models.divisor_result import DivisorCliqueResult, FamilyFlags

logging = LoggerManager.get_logger(__name__)

MAX_N = 10**12
MAX_PRIMES = 12
MAX_DIVISORS = 4096
DIVISOR_KINDS = ("power", "ipg", "diff")


@dataclass(frozen=True, order=True)
class Divisor:
    primes: tuple[int, ...]
    exponents: tuple[int, ...]

    @cached_property
    def value(self) -> int:
        return reduce(lambda acc, pe: acc * pe[0] ** pe[1], zip(self.primes, self.exponents), 1)

    @cached_property
    def totient(self) -> int:
        phi = 1
        for p, e in zip(self.primes, self.exponents):
            if e:
                phi *= p ** (e - 1) * (p - 1)
        return phi

    def divides(self, other: "Divisor") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def comparable(self, other: "Divisor") -> bool:
        return self.divides(other) or other.divides(self)

    def shares_prime(self, other: "Divisor") -> bool:
        return any(a and b for a, b in zip(self.exponents, other.exponents))

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def factorization(n: int) -> list[tuple[int, int]]:
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    if n > MAX_N:
        raise TooManyDivisors(f"n = {n} exceeds {MAX_N}")
    return sorted((int(p), int(e)) for p, e in factorint(n).items())


def divisors_of(n: int) -> list[Divisor]:
    """All divisors of n in increasing order of value."""
    fac = factorization(n)
    primes = tuple(p for p, _ in fac)
    count = reduce(lambda acc, pe: acc * (pe[1] + 1), fac, 1)
    if len(primes) > MAX_PRIMES:
        raise TooManyDivisors(f"n = {n} has {len(primes)} distinct primes (limit {MAX_PRIMES})")
    if count > MAX_DIVISORS:
        raise TooManyDivisors(f"n = {n} has {count} divisors (limit {MAX_DIVISORS})")
    divs = [Divisor(primes, exps) for exps in product(*(range(e + 1) for _, e in fac))]
    return sorted(divs, key=lambda d: d.value)


def divisor(n: int, value: int) -> Divisor:
    fac = factorization(n)
    if n % value:
        raise InvalidParameter(f"{value} does not divide {n}")
    exps = []
    for p, _ in fac:
        e = 0
        while value % p == 0:
            value //= p
            e += 1
        exps.append(e)
    return Divisor(tuple(p for p, _ in fac), tuple(exps))


def symbolic_diff_adjacent(d1: Union[int, Divisor], d2: Union[int, Divisor]) -> bool:
    """
    Whether elements of orders d1 and d2 are adjacent in D(Z_n): the orders
    share a prime and neither divides the other.
    """
    if isinstance(d1, Divisor) and isinstance(d2, Divisor):
        return d1.shares_prime(d2) and not d1.comparable(d2)
    a, b = int(d1), int(d2)
    return gcd(a, b) > 1 and a % b != 0 and b % a != 0


class DivisorFamily:
    """A set of divisors of n, classified by pairwise scans."""

    def __init__(self, n: int, members: Iterable[Union[int, Divisor]]):
        self.n = n
        self.n_factorization = factorization(n)
        self.members: list[Divisor] = sorted(
            {m if isinstance(m, Divisor) else divisor(n, m) for m in members}, key=lambda d: d.value
        )

    def _pairs(self):
        ms = self.members
        return ((a, b) for i, a in enumerate(ms) for b in ms[i + 1 :])

    @property
    def is_chain(self) -> bool:
        return all(a.comparable(b) for a, b in self._pairs())

    @property
    def is_sperner(self) -> bool:
        return not any(a.comparable(b) for a, b in self._pairs())

    @property
    def is_intersecting(self) -> bool:
        return all(a.shares_prime(b) for a, b in self._pairs())

    @property
    def weight(self) -> int:
        return sum(m.totient for m in self.members)

    @property
    def values(self) -> list[int]:
        return [m.value for m in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"DivisorFamily(n={self.n}, {self.values})"


def classify_family(family: DivisorFamily) -> FamilyFlags:
    return FamilyFlags(
        is_chain=family.is_chain,
        is_intersecting=family.is_intersecting,
        is_sperner=family.is_sperner,
        weight=family.weight,
    )


def _compatibility_rows(divs: Sequence[Divisor], compatible) -> list[int]:
    rows = [0] * len(divs)
    for i, a in enumerate(divs):
        for j in range(i + 1, len(divs)):
            if compatible(a, divs[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def _best_family(
    divs: Sequence[Divisor], compatible, weights: Sequence[int], budget: Optional[int]
) -> tuple[list[int], int]:
    rows = _compatibility_rows(divs, compatible)
    clique, weight = max_weight_clique(rows, weights, budget)
    return sorted(divs[i].value for i in clique), weight


def omega_via_divisors(n: int, kind: str, budget: Optional[int] = None) -> DivisorCliqueResult:
    """
    Clique number of a graph on Z(n) from its divisor lattice:

    * power: max sum of phi over chains
    * ipg: 1 + max sum of phi over intersecting families of divisors > 1
    * diff: max |S| and, separately, max sum of phi over intersecting Sperner families
    """
    if kind not in DIVISOR_KINDS:
        raise InvalidParameter(f"unknown kind {kind!r}; expected one of {', '.join(DIVISOR_KINDS)}")
    divs = divisors_of(n)
    if kind == "power":
        witness, value = _best_family(divs, Divisor.comparable, [d.totient for d in divs], budget)
        result = DivisorCliqueResult(n, kind, value, witness, divisor_count=len(divs))
    elif kind == "ipg":
        nontrivial = [d for d in divs if d.value > 1]
        witness, value = _best_family(
            nontrivial, Divisor.shares_prime, [d.totient for d in nontrivial], budget
        )
        result = DivisorCliqueResult(n, kind, value + 1, [1] + witness, divisor_count=len(divs))
    else:
        nontrivial = [d for d in divs if d.value > 1]
        compatible = symbolic_diff_adjacent
        witness, value = _best_family(nontrivial, compatible, [1] * len(nontrivial), budget)
        weighted_witness, weighted_value = _best_family(
            nontrivial, compatible, [d.totient for d in nontrivial], budget
        )
        result = DivisorCliqueResult(
            n,
            kind,
            value,
            witness,
            weighted_value=weighted_value,
            weighted_witness=weighted_witness,
            divisor_count=len(divs),
        )
    logging.debug(f"➗ divisor optimum for Z({n}) {kind}: {result.value} via {result.witness}")
    return result
