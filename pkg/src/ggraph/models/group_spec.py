from dataclasses import dataclass, field
from typing import Tuple

Cycle = Tuple[int, ...]
PermutationSpec = Tuple[Cycle, ...]


@dataclass(frozen=True)
class AtomSpec:
    """
    One factor of a group spec: an atom name with its integer parameters, or
    for `Perm` the generating permutations as 1-based cycle lists.
    """

    kind: str
    params: Tuple[int, ...] = ()
    permutations: Tuple[PermutationSpec, ...] = ()
    offset: int = 0  # byte offset of the atom in the source text

    @property
    def text(self) -> str:
        if self.kind == "M11":
            return "M11"
        if self.kind == "Perm":
            gens = []
            for perm in self.permutations:
                gens.append("".join("(" + " ".join(map(str, c)) + ")" for c in perm) or "()")
            return f"Perm({', '.join(gens)})"
        return f"{self.kind}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class GroupSpec:
    """Parsed group expression: the direct product of its factors, left to right."""

    factors: Tuple[AtomSpec, ...] = field(default_factory=tuple)

    @property
    def text(self) -> str:
        return " x ".join(f.text for f in self.factors)

    @property
    def is_product(self) -> bool:
        return len(self.factors) > 1

    def __str__(self) -> str:
        return self.text
