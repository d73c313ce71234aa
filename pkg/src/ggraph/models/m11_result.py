from dataclasses import asdict, dataclass, field
from typing import Any, Optional

M11_TARGETS = {
    "reduced_vertices": 825,
    "independent_part": 165,
    "part_neighbours": 4,
    "remainder_vertices": 660,
    "remainder_valency": 5,
    "remainder_diameter": 9,
    "remainder_girth": 3,
}


@dataclass
class M11Summary:
    """
    Counts from the M11 difference-graph pipeline: remove isolated vertices,
    reduce twins, then split the result into an independent part and the
    remainder it hangs off.
    """

    group_order: int
    difference_vertices: int
    difference_edges: int
    reduced_vertices: int
    reduced_edges: int
    rounds: int
    independent_part: int = 0
    part_neighbours: list[int] = field(default_factory=list)
    remainder_vertices: int = 0
    remainder_degrees: list[int] = field(default_factory=list)
    remainder_diameter: Optional[int] = None
    remainder_girth: Optional[int] = None
    alternatives: dict[str, int] = field(default_factory=dict)

    @property
    def remainder_valency(self) -> Optional[int]:
        return self.remainder_degrees[0] if len(self.remainder_degrees) == 1 else None

    def measured(self) -> dict[str, Any]:
        return {
            "reduced_vertices": self.reduced_vertices,
            "independent_part": self.independent_part,
            "part_neighbours": self.part_neighbours[0] if len(self.part_neighbours) == 1 else None,
            "remainder_vertices": self.remainder_vertices,
            "remainder_valency": self.remainder_valency,
            "remainder_diameter": self.remainder_diameter,
            "remainder_girth": self.remainder_girth,
        }

    def mismatches(self) -> dict[str, tuple[Any, int]]:
        measured = self.measured()
        return {k: (measured[k], target) for k, target in M11_TARGETS.items() if measured[k] != target}

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["remainder_diameter"] = "inf" if self.remainder_diameter is None else self.remainder_diameter
        data["remainder_girth"] = "inf" if self.remainder_girth is None else self.remainder_girth
        data["targets"] = dict(M11_TARGETS)
        data["mismatches"] = {k: list(v) for k, v in self.mismatches().items()}
        return data
