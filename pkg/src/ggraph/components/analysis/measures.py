"""
Connectivity, distance and cycle measurements on bitset graphs.

`analyze` measures a graph vertex by vertex. `analyze_blowup` measures the
element-level graph behind a class-level difference graph without building
it: each class vertex stands for an independent set of `weight` elements,
all joined to every element of each neighbouring class.
"""

from typing import Optional

import networkx as nx

from ggraph.components.graphs.graph import Graph
from ggraph.models.analysis_result import AnalysisResult
from ggraph.utils.bit_utils import iter_bits, popcount


def bfs_distances(rows: tuple[int, ...], source: int) -> dict[int, int]:
    """Distances from `source` to every vertex it reaches."""
    dist = {source: 0}
    visited = 1 << source
    frontier = 1 << source
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        nxt &= ~visited
        visited |= nxt
        for v in iter_bits(nxt):
            dist[v] = level
        frontier = nxt
    return dist


def eccentricity(rows: tuple[int, ...], source: int) -> int:
    visited = frontier = 1 << source
    level = 0
    while True:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        nxt &= ~visited
        if not nxt:
            return level
        visited |= nxt
        frontier = nxt
        level += 1


def has_triangle(rows: tuple[int, ...]) -> bool:
    for u, row in enumerate(rows):
        for v in iter_bits(row >> (u + 1)):
            if row & rows[u + 1 + v]:
                return True
    return False


def girth(rows: tuple[int, ...]) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest."""
    if has_triangle(rows):
        return 3
    best: Optional[int] = None
    for root in range(len(rows)):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            if best is not None and 2 * dist[frontier[0]] + 1 >= best:
                break
            nxt = []
            for u in frontier:
                for w in iter_bits(rows[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        length = dist[u] + dist[w] + 1
                        if best is None or length < best:
                            best = length
            frontier = nxt
    return best


def connected_components(graph: Graph) -> list[list[int]]:
    comps = [sorted(c) for c in nx.connected_components(graph.to_networkx())]
    return sorted(comps, key=lambda c: c[0])


def two_coloring(graph: Graph) -> Optional[dict[int, int]]:
    g = graph.to_networkx()
    if not nx.is_bipartite(g):
        return None
    return {int(v): int(c) for v, c in sorted(nx.bipartite.color(g).items())}


def analyze(graph: Graph) -> AnalysisResult:
    rows = graph.rows
    components = connected_components(graph)
    component_diameters = [max(eccentricity(rows, v) for v in comp) for comp in components]
    if not components:
        diameter: Optional[int] = 0
    elif len(components) == 1:
        diameter = component_diameters[0]
    else:
        diameter = None

    degrees = graph.degrees()
    all_even = all(d % 2 == 0 for d in degrees)
    edge_components = [c for c in components if any(degrees[v] for v in c)]
    coloring = two_coloring(graph)
    return AnalysisResult(
        n=graph.n,
        edges=graph.edge_count,
        components=components,
        diameter=diameter,
        component_diameters=component_diameters,
        girth=girth(rows),
        bipartite=coloring is not None,
        coloring=coloring,
        all_degrees_even=all_even,
        eulerian_per_component=all_even,
        eulerian=all_even and len(edge_components) == 1,
        degree_set=sorted(set(degrees)),
    )


def analyze_blowup(class_graph: Graph) -> AnalysisResult:
    """
    Exact element-level measurements of the blow-up of `class_graph` where
    class vertex c becomes an independent set of `vertices[c].weight` elements.
    Component members and colours are reported as group elements.
    """
    rows = class_graph.rows
    weights = [v.weight for v in class_graph.vertices]
    members = [v.members or (v.id,) for v in class_graph.vertices]

    components: list[list[int]] = []
    component_diameters: list[int] = []
    for comp in connected_components(class_graph):
        if len(comp) == 1 and not rows[comp[0]]:
            for x in members[comp[0]]:
                components.append([x])
                component_diameters.append(0)
            continue
        components.append(sorted(x for c in comp for x in members[c]))
        d = max(eccentricity(rows, c) for c in comp)
        if any(weights[c] >= 2 for c in comp):
            d = max(d, 2)
        component_diameters.append(d)
    order = sorted(range(len(components)), key=lambda i: components[i][0])
    components = [components[i] for i in order]
    component_diameters = [component_diameters[i] for i in order]

    if not components:
        diameter: Optional[int] = 0
    elif len(components) == 1:
        diameter = component_diameters[0]
    else:
        diameter = None

    if has_triangle(rows):
        blown_girth: Optional[int] = 3
    else:
        base = girth(rows)
        four = base == 4 or any(
            weights[c] >= 2
            and (popcount(rows[c]) >= 2 or any(weights[d] >= 2 for d in iter_bits(rows[c])))
            for c in range(len(rows))
        )
        blown_girth = 4 if four else base

    degrees = [sum(weights[d] for d in iter_bits(row)) for row in rows]
    all_even = all(deg % 2 == 0 for deg in degrees)
    edge_components = sum(1 for c in components if len(c) > 1)

    class_coloring = two_coloring(class_graph)
    coloring = None
    if class_coloring is not None:
        coloring = {x: colour for c, colour in class_coloring.items() for x in members[c]}

    return AnalysisResult(
        n=sum(weights),
        edges=sum(w * deg for w, deg in zip(weights, degrees)) // 2,
        components=components,
        diameter=diameter,
        component_diameters=component_diameters,
        girth=blown_girth,
        bipartite=class_coloring is not None,
        coloring=coloring,
        all_degrees_even=all_even,
        eulerian_per_component=all_even,
        eulerian=all_even and edge_components == 1,
        degree_set=sorted(set(degrees)),
    )
