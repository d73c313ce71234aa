"""
Power graph, intersection power graph, enhanced power graph and their
difference graphs, computed on generator classes and expanded to elements.

Every graph here is a blow-up of its class-level graph: two elements of
distinct classes are adjacent iff their classes are, and two elements of the
same class are adjacent in all three parent graphs but never in a difference
graph.
"""

from typing import Optional

from ggraph.components.graphs.graph import Graph, Vertex
from ggraph.components.groups.cyclic_lattice import CyclicLattice
from ggraph.components.groups.finite_group import FiniteGroup
from ggraph.config.config import Config
from ggraph.exception import InvalidParameter, InvariantViolation, VertexCapExceeded
from ggraph.logger_manager import LoggerManager
from ggraph.utils.bit_utils import iter_bits, mask_of

logging = LoggerManager.get_logger(__name__)

GRAPH_KINDS = ("power", "ipg", "epg", "diff", "diff_undeleted", "epg_diff")
DIFFERENCE_KINDS = ("diff", "diff_undeleted", "epg_diff")


def _power_rows(lattice: CyclicLattice) -> list[int]:
    return [(d | u) & ~(1 << c) for c, (d, u) in enumerate(zip(lattice.down, lattice.up))]


def _ipg_rows(lattice: CyclicLattice) -> list[int]:
    e = lattice.identity_class
    everyone = (1 << len(lattice)) - 1
    rows = [(m | (1 << e)) & ~(1 << c) for c, m in enumerate(lattice.meets)]
    rows[e] = everyone & ~(1 << e)
    return rows


def _epg_rows(lattice: CyclicLattice) -> list[int]:
    rows = []
    for c, up in enumerate(lattice.up):
        mask = 0
        for top in iter_bits(up):
            mask |= lattice.down[top]
        rows.append(mask & ~(1 << c))
    return rows


def class_adjacency(lattice: CyclicLattice, kind: str) -> list[int]:
    """Class-level adjacency rows (bit d of row c set iff classes c and d are adjacent)."""
    if kind not in GRAPH_KINDS:
        raise InvalidParameter(f"unknown graph kind {kind!r}; expected one of {', '.join(GRAPH_KINDS)}")
    power = _power_rows(lattice)
    if kind == "power":
        return power
    if kind in ("ipg", "diff", "diff_undeleted"):
        ipg = _ipg_rows(lattice)
        _assert_spanning(lattice, power, ipg, "intersection power graph")
        if kind == "ipg":
            return ipg
        return [i & ~p for i, p in zip(ipg, power)]
    epg = _epg_rows(lattice)
    _assert_spanning(lattice, power, epg, "enhanced power graph")
    if kind == "epg":
        return epg
    return [x & ~p for x, p in zip(epg, power)]


def _assert_spanning(lattice: CyclicLattice, inner: list[int], outer: list[int], what: str):
    for c, (a, b) in enumerate(zip(inner, outer)):
        if a & ~b:
            raise InvariantViolation(
                f"{lattice.group.name}: power graph edge at class {c} missing from the {what}"
            )


def _same_class_adjacent(kind: str) -> bool:
    return kind not in DIFFERENCE_KINDS


def class_graph(lattice: CyclicLattice, kind: str) -> Graph:
    """
    The quotient by generator classes. Vertex `members` hold the class's
    elements; for `diff` and `epg_diff` isolated classes are removed.
    """
    rows = class_adjacency(lattice, kind)
    group = lattice.group
    vertices = [
        Vertex(
            id=c.class_id,
            label=group.label(c.representative),
            order=c.subgroup_order,
            element=c.representative,
            members=c.members,
        )
        for c in lattice.classes
    ]
    graph = Graph(vertices, rows, name=group.name, kind=kind, level="class")
    if kind in ("diff", "epg_diff"):
        graph = graph.without_isolated()
    return graph


def expand_class_graph(lattice: CyclicLattice, kind: str, vertex_cap: Optional[int] = None) -> Graph:
    """Element-level graph on all of G, vertex id = element index."""
    group = lattice.group
    cap = vertex_cap if vertex_cap is not None else Config().vertex_cap
    if group.order > cap:
        raise VertexCapExceeded(f"{group.name} {kind} graph", group.order, cap)

    class_rows = class_adjacency(lattice, kind)
    member_masks = [mask_of(c.members) for c in lattice.classes]
    inside = _same_class_adjacent(kind)
    rows = [0] * group.order
    for c, cls in enumerate(lattice.classes):
        row = 0
        for d in iter_bits(class_rows[c]):
            row |= member_masks[d]
        for x in cls.members:
            rows[x] = row | (member_masks[c] & ~(1 << x)) if inside else row
    vertices = [
        Vertex(id=g, label=group.label(g), order=group.element_order(g), element=g)
        for g in range(group.order)
    ]
    return Graph(vertices, rows, name=group.name, kind=kind)


def build_graph(lattice: CyclicLattice, kind: str, vertex_cap: Optional[int] = None) -> Graph:
    """Element-level graph of the given kind; `diff` and `epg_diff` drop isolated vertices."""
    graph = expand_class_graph(lattice, kind, vertex_cap)
    if kind in ("diff", "epg_diff"):
        graph = graph.without_isolated()
    logging.debug(f"📐 {graph.name} {kind}: {graph.n} vertices, {graph.edge_count} edges")
    return graph


def power_graph(lattice: CyclicLattice) -> Graph:
    return build_graph(lattice, "power")


def intersection_power_graph(lattice: CyclicLattice) -> Graph:
    return build_graph(lattice, "ipg")


def enhanced_power_graph(lattice: CyclicLattice) -> Graph:
    return build_graph(lattice, "epg")


def difference_graph_undeleted(lattice: CyclicLattice) -> Graph:
    return build_graph(lattice, "diff_undeleted")


def difference_graph(lattice: CyclicLattice) -> Graph:
    return build_graph(lattice, "diff")


def enhanced_difference_graph(lattice: CyclicLattice) -> Graph:
    return build_graph(lattice, "epg_diff")


def class_edge_count(lattice: CyclicLattice, kind: str) -> int:
    """Element-level edge count computed from the class graph alone."""
    rows = class_adjacency(lattice, kind)
    sizes = lattice.sizes
    total = 0
    for c, row in enumerate(rows):
        total += sizes[c] * sum(sizes[d] for d in iter_bits(row))
    total //= 2
    if _same_class_adjacent(kind):
        total += sum(s * (s - 1) // 2 for s in sizes)
    return total


def brute_force_graph(group: FiniteGroup, kind: str) -> Graph:
    """
    Element-by-element construction straight from the definitions, used as an
    oracle for the class-level route on small groups.
    """
    n = group.order
    subgroups = [group.cyclic_subgroup(g) for g in range(n)]
    distinct = set(subgroups)
    rows = [0] * n
    for x in range(n):
        for y in range(x + 1, n):
            sx, sy = subgroups[x], subgroups[y]
            power = y in sx or x in sy
            if kind == "power":
                adjacent = power
            elif kind in ("ipg", "diff", "diff_undeleted"):
                ipg = x == 0 or y == 0 or len(sx & sy) > 1
                adjacent = ipg if kind == "ipg" else ipg and not power
            else:
                epg = any(sx <= s and sy <= s for s in distinct)
                adjacent = epg if kind == "epg" else epg and not power
            if adjacent:
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    vertices = [Vertex(g, group.label(g), group.element_order(g), g) for g in range(n)]
    graph = Graph(vertices, rows, name=group.name, kind=kind)
    if kind in ("diff", "epg_diff"):
        graph = graph.without_isolated()
    return graph


def assert_blowup(lattice: CyclicLattice, graph: Graph):
    """
    Checks on an element-level difference graph that each generator class is
    independent and that any two classes are joined completely or not at all.
    """
    pos = {v.element: v.id for v in graph.vertices}
    for cls in lattice.classes:
        ids = [pos[x] for x in cls.members if x in pos]
        if not ids:
            continue
        class_mask = mask_of(ids)
        for u in ids:
            if graph.rows[u] & class_mask:
                raise InvariantViolation(f"{graph.name}: generator class {cls.class_id} is not independent")
        first = graph.rows[ids[0]]
        if any(graph.rows[u] != first for u in ids[1:]):
            raise InvariantViolation(f"{graph.name}: class {cls.class_id} members have different neighbourhoods")
