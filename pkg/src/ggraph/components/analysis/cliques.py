import sys
from typing import Optional, Sequence

from ggraph.components.graphs.constructors import DIFFERENCE_KINDS, class_adjacency
from ggraph.components.graphs.graph import Graph
from ggraph.components.groups.cyclic_lattice import CyclicLattice
from ggraph.config.config import budget_or
from ggraph.exception import BudgetExceeded, InvariantViolation, VertexCapExceeded
from ggraph.logger_manager import LoggerManager
from ggraph.utils.bit_utils import mask_of

logging = LoggerManager.get_logger(__name__)


class CliqueSearch:
    """
    Exact maximum (weighted) clique by branch and bound over bitset rows.

    Candidates are greedily coloured; a colour class is an independent set, so
    the heaviest vertex of each class bounds what it can add. Vertices are
    branched on from the last colour backwards and pruned as soon as
    current weight + bound cannot beat the incumbent.
    """

    def __init__(self, rows: Sequence[int], weights: Optional[Sequence[int]] = None, budget: Optional[int] = None):
        self.rows = list(rows)
        self.weights = list(weights) if weights is not None else [1] * len(self.rows)
        self.budget = budget_or(budget)
        self.expansions = 0
        self.best: list[int] = []
        self.best_weight = 0

    def _colour_bounds(self, candidates: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bounds: list[int] = []
        uncoloured = candidates
        total = 0
        while uncoloured:
            available = uncoloured
            heaviest = 0
            while available:
                v = (available & -available).bit_length() - 1
                available &= ~self.rows[v] & ~(1 << v)
                uncoloured &= ~(1 << v)
                heaviest = max(heaviest, self.weights[v])
                order.append(v)
                bounds.append(-1)
            total += heaviest
            # every vertex of this colour class shares the cumulative bound
            for i in range(len(bounds) - 1, -1, -1):
                if bounds[i] != -1:
                    break
                bounds[i] = total
        return order, bounds

    def _expand(self, clique: list[int], weight: int, candidates: int):
        self.expansions += 1
        if self.expansions > self.budget:
            raise BudgetExceeded("max clique", self.budget, partial=sorted(self.best))
        order, bounds = self._colour_bounds(candidates)
        for i in range(len(order) - 1, -1, -1):
            if weight + bounds[i] <= self.best_weight:
                return
            v = order[i]
            new_weight = weight + self.weights[v]
            new_candidates = candidates & self.rows[v]
            clique.append(v)
            if new_candidates:
                self._expand(clique, new_weight, new_candidates)
            elif new_weight > self.best_weight:
                self.best = list(clique)
                self.best_weight = new_weight
            clique.pop()
            candidates &= ~(1 << v)

    def run(self, candidates: Optional[int] = None) -> list[int]:
        if candidates is None:
            candidates = (1 << len(self.rows)) - 1
        if candidates:
            # recursion depth grows with the clique size
            sys.setrecursionlimit(max(sys.getrecursionlimit(), len(self.rows) + 200))
            self._expand([], 0, candidates)
        clique = sorted(self.best)
        for i, u in enumerate(clique):
            for v in clique[i + 1 :]:
                if not self.rows[u] >> v & 1:
                    raise InvariantViolation(f"clique search returned non-adjacent pair {u}, {v}")
        return clique


def max_clique(graph: Graph, budget: Optional[int] = None, vertex_cap: Optional[int] = None) -> list[int]:
    """Vertex ids of a maximum clique (least-id tie-breaking is not guaranteed)."""
    if vertex_cap is not None and graph.n > vertex_cap:
        raise VertexCapExceeded(f"max clique on {graph.name}", graph.n, vertex_cap)
    search = CliqueSearch(graph.rows, budget=budget)
    clique = search.run()
    logging.debug(f"🔺 ω({graph.name} {graph.kind}) = {len(clique)} after {search.expansions} expansions")
    return clique


def max_weight_clique(
    rows: Sequence[int], weights: Sequence[int], budget: Optional[int] = None
) -> tuple[list[int], int]:
    search = CliqueSearch(rows, weights, budget)
    clique = search.run()
    return clique, sum(weights[v] for v in clique)


def is_clique(graph: Graph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    return all(graph.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def is_independent(graph: Graph, vertices: Sequence[int]) -> bool:
    mask = mask_of(vertices)
    return not any(graph.rows[v] & mask for v in vertices)


def class_clique(lattice: CyclicLattice, kind: str, budget: Optional[int] = None) -> list[int]:
    """
    A maximum clique of the element-level graph, found on generator classes.
    Classes are complete in the parent graphs and independent in difference
    graphs, so the former weigh their size and the latter weigh one.
    """
    rows = class_adjacency(lattice, kind)
    if kind in DIFFERENCE_KINDS:
        classes, _ = max_weight_clique(rows, [1] * len(rows), budget)
        return sorted(lattice.classes[c].representative for c in classes)
    classes, _ = max_weight_clique(rows, lattice.sizes, budget)
    return sorted(x for c in classes for x in lattice.classes[c].members)
