from collections import defaultdict

from ggraph.components.graphs.graph import Graph
from ggraph.logger_manager import LoggerManager
from ggraph.models.analysis_result import TwinReduction

logging = LoggerManager.get_logger(__name__)


def _twin_groups(graph: Graph, closed: bool) -> list[list[int]]:
    """Vertex groups of size >= 2 sharing an open (or closed) neighbourhood, in id order."""
    buckets: dict[int, list[int]] = defaultdict(list)
    for u, row in enumerate(graph.rows):
        buckets[row | (1 << u) if closed else row].append(u)
    return sorted((g for g in buckets.values() if len(g) > 1), key=lambda g: g[0])


def _merge_pass(graph: Graph, closed: bool) -> tuple[Graph, list[int], list[int], int]:
    """
    Merges every twin group into its least id. Returns the smaller graph, the
    map old id -> new id, the kept old ids and the number of vertices removed.
    """
    groups = _twin_groups(graph, closed)
    if not groups:
        return graph, list(range(graph.n)), list(range(graph.n)), 0
    keep_of = list(range(graph.n))
    removed = 0
    for group in groups:
        for v in group[1:]:
            keep_of[v] = group[0]
            removed += 1
    kept = sorted(set(keep_of))
    pos = {old: new for new, old in enumerate(kept)}
    return graph.induced_subgraph(kept), [pos[keep_of[v]] for v in range(graph.n)], kept, removed


def twin_reduce(graph: Graph) -> TwinReduction:
    """
    Complete twin reduction: each round merges all open-twin groups, then all
    closed-twin groups, always keeping the least id, until a round changes
    nothing. The reduced graph is the subgraph induced on the kept vertices.
    """
    current = graph
    class_map = list(range(graph.n))
    representatives = list(range(graph.n))
    rounds = open_merges = closed_merges = 0
    while True:
        changed = False
        for closed in (False, True):
            reduced, mapping, kept, removed = _merge_pass(current, closed)
            if not removed:
                continue
            changed = True
            if closed:
                closed_merges += removed
            else:
                open_merges += removed
            class_map = [mapping[c] for c in class_map]
            representatives = [representatives[v] for v in kept]
            current = reduced
        if not changed:
            break
        rounds += 1
    logging.debug(
        f"🪢 twin reduction of {graph.name}: {graph.n} -> {current.n} vertices "
        f"in {rounds} round(s) ({open_merges} open, {closed_merges} closed merges)"
    )
    return TwinReduction(
        reduced=current,
        class_map=class_map,
        representatives=representatives,
        rounds=rounds,
        open_merges=open_merges,
        closed_merges=closed_merges,
    )


def has_twins(graph: Graph) -> bool:
    return bool(_twin_groups(graph, closed=False) or _twin_groups(graph, closed=True))


def open_twin_reduce(graph: Graph) -> Graph:
    """Merges only open twins, to a fixpoint."""
    current = graph
    while True:
        current, _, _, removed = _merge_pass(current, closed=False)
        if not removed:
            return current


def closed_twin_reduce(graph: Graph) -> Graph:
    """Merges only closed twins, to a fixpoint."""
    current = graph
    while True:
        current, _, _, removed = _merge_pass(current, closed=True)
        if not removed:
            return current
