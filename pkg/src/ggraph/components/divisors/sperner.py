from dataclasses import dataclass
from math import prod
from typing import Any, Hashable

from sympy import prime

from ggraph.components.divisors.divisor_lattice import symbolic_diff_adjacent
from ggraph.components.graphs.graph import Graph
from ggraph.exception import GroundSetTooLarge, InvalidParameter
from ggraph.logger_manager import LoggerManager
from ggraph.models.divisor_result import CyclicEmbedding

logging = LoggerManager.get_logger(__name__)

MAX_GROUND_SET = 64


@dataclass(frozen=True)
class SpernerFamily:
    ground_set: tuple[Hashable, ...]
    sets: tuple[frozenset, ...]

    def is_sperner(self) -> bool:
        return not any(
            a <= b or b <= a for i, a in enumerate(self.sets) for b in self.sets[i + 1 :]
        )

    def intersection_graph(self, name: str = "intersection") -> Graph:
        k = len(self.sets)
        edges = [
            (i, j) for i in range(k) for j in range(i + 1, k) if self.sets[i] & self.sets[j]
        ]
        return Graph.from_edges(k, edges, name=name)


def vertex_member(v: int) -> tuple[str, int]:
    return ("v", v)


def edge_member(u: int, v: int) -> tuple[str, int, int]:
    return ("e", u, v)


def graph_to_sperner(graph: Graph) -> SpernerFamily:
    """
    Ground set V followed by E (edges in lexicographic order); vertex v gets
    F_v = {v} together with the edges at v. Two sets meet iff their vertices
    are adjacent, and v in F_v \\ F_w keeps the family an antichain.
    """
    if graph.n < 1:
        raise InvalidParameter("graph_to_sperner needs at least one vertex")
    edges = graph.edges()
    ground: list[Any] = [vertex_member(v) for v in range(graph.n)]
    ground += [edge_member(u, v) for u, v in edges]
    sets = [{vertex_member(v)} for v in range(graph.n)]
    for u, v in edges:
        sets[u].add(edge_member(u, v))
        sets[v].add(edge_member(u, v))
    return SpernerFamily(tuple(ground), tuple(frozenset(s) for s in sets))


def embed_in_cyclic(graph: Graph) -> CyclicEmbedding:
    """
    Places `graph` as an induced subgraph of D(Z_n), n the product of the
    first |V| + |E| primes, and checks every vertex pair with the divisor
    adjacency rule of D(Z_n).
    """
    family = graph_to_sperner(graph)
    size = len(family.ground_set)
    if size > MAX_GROUND_SET:
        raise GroundSetTooLarge(
            f"{graph.name}: ground set of {size} members exceeds {MAX_GROUND_SET} primes"
        )
    primes = [int(prime(i + 1)) for i in range(size)]
    position = {member: i for i, member in enumerate(family.ground_set)}
    divisors = []
    for members in family.sets:
        mask = 0
        for member in members:
            mask |= 1 << position[member]
        divisors.append(mask)

    values = [prod(p for i, p in enumerate(primes) if mask >> i & 1) for mask in divisors]
    mismatches = [
        (u, v)
        for u in range(graph.n)
        for v in range(u + 1, graph.n)
        if symbolic_diff_adjacent(values[u], values[v]) != graph.adjacent(u, v)
    ]
    if mismatches:
        logging.warning(f"⚠️ embedding of {graph.name} disagrees on {len(mismatches)} pair(s)")
    return CyclicEmbedding(
        ground_set=list(family.ground_set),
        primes=primes,
        divisors=divisors,
        verified=not mismatches,
        mismatches=mismatches,
    )
