from typing import Optional

from ggraph.components.analysis.measures import analyze
from ggraph.components.analysis.twins import closed_twin_reduce, open_twin_reduce, twin_reduce
from ggraph.components.graphs.constructors import build_graph
from ggraph.components.graphs.graph import Graph
from ggraph.config.config import Config
from ggraph.logger_manager import LoggerManager
from ggraph.models.m11_result import M11_TARGETS, M11Summary
from ggraph.services.graph_service import GraphService
from ggraph.utils.bit_utils import mask_of, popcount

logging = LoggerManager.get_logger(__name__)


def find_independent_split(graph: Graph, inner_degree: int) -> list[int]:
    """
    Greedy independent set among the vertices of degree `inner_degree`, in id
    order. Every member then has exactly `inner_degree` neighbours in the rest.
    """
    chosen: list[int] = []
    blocked = 0
    for v, row in enumerate(graph.rows):
        if popcount(row) == inner_degree and not blocked >> v & 1:
            chosen.append(v)
            blocked |= row | (1 << v)
    return chosen


class M11Service:
    """
    Builds D(M11), removes isolated vertices, reduces twins and measures the
    reduced graph. When the vertex target is missed, the other readings of
    the pipeline are counted too.
    """

    def __init__(self, config: Optional[Config] = None, graphs: Optional[GraphService] = None):
        self.config = config or Config()
        self.graphs = graphs or GraphService(self.config)

    def run(self) -> tuple[M11Summary, Graph]:
        logging.info("🧩 Building M11 and its difference graph")
        lattice = self.graphs.lattice("M11")
        undeleted = build_graph(lattice, "diff_undeleted", self.config.vertex_cap)
        difference = undeleted.without_isolated(kind="diff")
        logging.info(f"🧩 D(M11): {difference.n} vertices, {difference.edge_count} edges")

        reduction = twin_reduce(difference)
        reduced = reduction.reduced
        summary = M11Summary(
            group_order=lattice.group.order,
            difference_vertices=difference.n,
            difference_edges=difference.edge_count,
            reduced_vertices=reduced.n,
            reduced_edges=reduced.edge_count,
            rounds=reduction.rounds,
        )
        logging.info(f"🪢 Twin reduction: {reduced.n} vertices after {reduction.rounds} round(s)")

        self._split(reduced, summary)
        if reduced.n != M11_TARGETS["reduced_vertices"]:
            logging.warning(f"⚠️ Reduced graph has {reduced.n} vertices; counting the alternative pipelines")
            summary.alternatives = {
                "open_only": open_twin_reduce(difference).n,
                "closed_only": closed_twin_reduce(difference).n,
                "reduce_then_remove": twin_reduce(undeleted).reduced.without_isolated().n,
            }
        return summary, reduced

    def _split(self, reduced: Graph, summary: M11Summary):
        part = find_independent_split(reduced, M11_TARGETS["part_neighbours"])
        rest = sorted(set(range(reduced.n)) - set(part))
        rest_mask = mask_of(rest)
        summary.independent_part = len(part)
        summary.part_neighbours = sorted({popcount(reduced.rows[v] & rest_mask) for v in part})
        if not rest:
            return
        remainder = reduced.induced_subgraph(rest)
        measures = analyze(remainder)
        summary.remainder_vertices = remainder.n
        summary.remainder_degrees = measures.degree_set
        summary.remainder_diameter = measures.diameter
        summary.remainder_girth = measures.girth
        logging.info(
            f"📏 Independent part {len(part)}, remainder {remainder.n} vertices "
            f"(degrees {measures.degree_set}, diameter {measures.diameter}, girth {measures.girth})"
        )
