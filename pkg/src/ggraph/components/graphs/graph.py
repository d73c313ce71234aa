from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence

import networkx as nx

from ggraph.exception import InvariantViolation
from ggraph.utils.bit_utils import iter_bits, mask_of, popcount


@dataclass(frozen=True)
class Vertex:
    """
    A vertex record. `element` is the group element the vertex stands for
    (the class representative on class-level graphs); `members` lists every
    group element a class-level vertex represents.
    """

    id: int
    label: str
    order: int = 0
    element: Optional[int] = None
    members: tuple[int, ...] = ()

    @property
    def weight(self) -> int:
        return len(self.members) if self.members else 1


class Graph:
    """
    Undirected simple graph on dense vertex ids 0..n-1. Row u is a python int
    whose bit v is set iff u ~ v. Immutable once built; every derived graph
    is a new object.
    """

    def __init__(
        self,
        vertices: Sequence[Vertex],
        rows: Sequence[int],
        name: str = "",
        kind: str = "",
        level: str = "element",
    ):
        if len(vertices) != len(rows):
            raise InvariantViolation("vertex and row counts differ")
        self.vertices = tuple(vertices)
        self.rows = tuple(rows)
        self.name = name
        self.kind = kind
        self.level = level

    # === construction ===

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
        name: str = "",
        kind: str = "",
    ) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvariantViolation(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        labels = labels or [str(i) for i in range(n)]
        return cls([Vertex(i, labels[i]) for i in range(n)], rows, name=name, kind=kind)

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: str = "") -> "Graph":
        nodes = sorted(g.nodes())
        pos = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(
            len(nodes),
            ((pos[u], pos[v]) for u, v in g.edges() if u != v),
            labels=[str(v) for v in nodes],
            name=name,
        )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    # === queries ===

    @property
    def n(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return popcount(self.rows[u])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v, in lexicographic order."""
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def is_edgeless(self) -> bool:
        return not any(self.rows)

    def is_complete(self) -> bool:
        full = self.all_mask
        return all(r | (1 << u) == full for u, r in enumerate(self.rows))

    def isolated(self) -> list[int]:
        return [u for u, r in enumerate(self.rows) if not r]

    def labels(self) -> list[str]:
        return [v.label for v in self.vertices]

    def elements(self) -> list[Optional[int]]:
        return [v.element for v in self.vertices]

    def validate(self):
        for u, row in enumerate(self.rows):
            if row >> u & 1:
                raise InvariantViolation(f"{self.name}: self-loop at {u}")
            if row >> self.n:
                raise InvariantViolation(f"{self.name}: row {u} points past the last vertex")
            for v in iter_bits(row):
                if not self.rows[v] >> u & 1:
                    raise InvariantViolation(f"{self.name}: edge {u}-{v} is not symmetric")

    # === derived graphs ===

    def induced_subgraph(self, keep: Iterable[int], kind: Optional[str] = None) -> "Graph":
        """Restriction to `keep`; ids re-densified in ascending order, provenance kept."""
        keep = sorted(set(keep))
        pos = {old: new for new, old in enumerate(keep)}
        keep_mask = mask_of(keep)
        rows = []
        for old in keep:
            row = 0
            for w in iter_bits(self.rows[old] & keep_mask):
                row |= 1 << pos[w]
            rows.append(row)
        vertices = [replace(self.vertices[old], id=new) for new, old in enumerate(keep)]
        return Graph(vertices, rows, name=self.name, kind=kind or self.kind, level=self.level)

    def complement(self) -> "Graph":
        full = self.all_mask
        rows = [full ^ r ^ (1 << u) for u, r in enumerate(self.rows)]
        return Graph(self.vertices, rows, name=self.name, kind=f"complement({self.kind})", level=self.level)

    def without_isolated(self, kind: Optional[str] = None) -> "Graph":
        return self.induced_subgraph((u for u, r in enumerate(self.rows) if r), kind=kind)

    def same_adjacency(self, other: "Graph") -> bool:
        return self.rows == other.rows

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Graph({self.name!r}, kind={self.kind!r}, n={self.n}, edges={self.edge_count})"
