from typing import Optional

from ggraph.components.graphs.graph import Graph
from ggraph.config.config import Config
from ggraph.exception import VertexCapExceeded
from ggraph.models.analysis_result import CographVerdict


def find_induced_p4(graph: Graph) -> Optional[tuple[int, int, int, int]]:
    """
    Some induced path a-b-c-d, or None. Every induced P4 has a middle edge b-c
    with a in N(b) outside N[c] and d in N(c) outside N[b], a and d non-adjacent;
    so scanning edges and these two candidate sets covers all of them.
    """
    rows = graph.rows
    for b, c in graph.edges():
        for middle_b, middle_c in ((b, c), (c, b)):
            left = rows[middle_b] & ~rows[middle_c] & ~(1 << middle_c)
            right = rows[middle_c] & ~rows[middle_b] & ~(1 << middle_b)
            if not left or not right:
                continue
            a_mask = left
            while a_mask:
                a = (a_mask & -a_mask).bit_length() - 1
                a_mask ^= 1 << a
                far = right & ~rows[a] & ~(1 << a)
                if far:
                    d = (far & -far).bit_length() - 1
                    return (a, middle_b, middle_c, d)
    return None


def is_cograph(graph: Graph, vertex_cap: Optional[int] = None) -> CographVerdict:
    cap = vertex_cap if vertex_cap is not None else Config().cograph_cap
    if graph.n > cap:
        raise VertexCapExceeded(f"cograph test on {graph.name}", graph.n, cap)
    witness = find_induced_p4(graph)
    return CographVerdict(is_cograph=witness is None, witness=witness)
