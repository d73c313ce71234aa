from dataclasses import asdict, dataclass, field
from typing import Any, Optional


def _finite_or_inf(value: Optional[int]) -> Any:
    return "inf" if value is None else value


@dataclass
class AnalysisResult:
    """
    Measurements of one graph. `None` stands for an infinite diameter
    (disconnected graph) or girth (forest).
    """

    n: int
    edges: int
    components: list[list[int]]
    diameter: Optional[int]
    component_diameters: list[int]
    girth: Optional[int]
    bipartite: bool
    coloring: Optional[dict[int, int]] = None
    all_degrees_even: bool = True
    eulerian_per_component: bool = True
    eulerian: bool = False
    degree_set: list[int] = field(default_factory=list)

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    @property
    def component_sizes(self) -> list[int]:
        return sorted((len(c) for c in self.components), reverse=True)

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["diameter"] = _finite_or_inf(self.diameter)
        data["girth"] = _finite_or_inf(self.girth)
        data["components"] = len(self.components)
        data["component_sizes"] = self.component_sizes
        data.pop("coloring")
        return data


@dataclass
class TwinReduction:
    """
    Result of complete twin reduction. `class_map[v]` is the reduced vertex the
    input vertex v was merged into; `representatives[r]` is the input vertex kept
    for reduced vertex r (the least id of its twin class).
    """

    reduced: Any
    class_map: list[int]
    representatives: list[int]
    rounds: int
    open_merges: int = 0
    closed_merges: int = 0


@dataclass
class PerfectVerdict:
    status: str  # "perfect" | "imperfect" | "unknown"
    witness: Optional[list[int]] = None
    in_complement: bool = False
    reduced_vertices: int = 0

    @property
    def perfect(self) -> Optional[bool]:
        return {"perfect": True, "imperfect": False}.get(self.status)


@dataclass
class CographVerdict:
    is_cograph: bool
    witness: Optional[tuple[int, int, int, int]] = None
