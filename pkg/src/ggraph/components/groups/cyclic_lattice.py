from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Optional

import numpy as np
from sympy import factorint, isprime, primefactors

from ggraph.components.groups.finite_group import FiniteGroup, GroupElement, Subgroup
from ggraph.logger_manager import LoggerManager
from ggraph.utils.bit_utils import iter_bits

logging = LoggerManager.get_logger(__name__)


@dataclass(frozen=True)
class GeneratorClass:
    """All generators of one cyclic subgroup; members are pairwise twins in every graph here."""

    class_id: int
    representative: int
    members: tuple[int, ...]
    subgroup_order: int
    subgroup: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.members)


class CyclicLattice:
    """
    Cyclic subgroups of a group, one GeneratorClass each, with the relations
    every graph construction reads:

    * ``down[c]``  bitmask of classes whose subgroup lies inside class c's (c included)
    * ``up[c]``    bitmask of classes whose subgroup contains class c's (c included)
    * ``atoms[c]`` bitmask of prime-order classes below c
    * ``meets[c]`` bitmask of classes d with <c> and <d> sharing a non-identity element

    Two cyclic subgroups intersect non-trivially exactly when they share a
    subgroup of prime order, so ``meets`` is the union of ``up[p]`` over the
    atoms p of c. Class ids follow ascending (subgroup order, least member).
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        discovered = group.cyclic_classes()
        ordering = sorted(range(len(discovered)), key=lambda i: (len(discovered[i]), min(discovered[i])))

        class_of = np.empty(group.order, dtype=np.int64)
        classes = []
        for new, old in enumerate(ordering):
            cycle = discovered[old]
            o = len(cycle)
            members = tuple(sorted(int(cycle[k]) for k in range(o) if gcd(k, o) == 1))
            class_of[list(members)] = new
            classes.append(
                GeneratorClass(
                    class_id=new,
                    representative=members[0],
                    members=members,
                    subgroup_order=o,
                    subgroup=frozenset(cycle),
                )
            )
        self.classes: list[GeneratorClass] = classes
        self.class_of = class_of

        down = []
        for cls in classes:
            mask = 0
            for c in {int(class_of[x]) for x in cls.subgroup}:
                mask |= 1 << c
            down.append(mask)
        up = [0] * len(classes)
        for c, mask in enumerate(down):
            for d in iter_bits(mask):
                up[d] |= 1 << c
        prime_mask = 0
        for c in classes:
            if isprime(c.subgroup_order):
                prime_mask |= 1 << c.class_id
        atoms = [mask & prime_mask for mask in down]
        meets = []
        for a in atoms:
            mask = 0
            for p in iter_bits(a):
                mask |= up[p]
            meets.append(mask)

        self.down = down
        self.up = up
        self.atoms = atoms
        self.meets = meets
        self.prime_set = frozenset(int(p) for p in primefactors(group.order))
        logging.debug(f"🔗 {group.name}: {len(classes)} cyclic subgroups")

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def identity_class(self) -> int:
        return int(self.class_of[0])

    def class_of_element(self, g: int) -> GeneratorClass:
        return self.classes[int(self.class_of[g])]

    def contains(self, a: int, b: int) -> bool:
        """<class a> contains <class b>."""
        return bool(self.down[a] >> b & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.contains(a, b) or self.contains(b, a)

    def meets_nontrivially(self, a: int, b: int) -> bool:
        return bool(self.meets[a] >> b & 1)

    @cached_property
    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    @cached_property
    def subgroup_orders(self) -> list[int]:
        return [c.subgroup_order for c in self.classes]


def generator_classes(group: FiniteGroup) -> CyclicLattice:
    return CyclicLattice(group)


def maximal_cyclic_classes(lattice: CyclicLattice) -> list[GeneratorClass]:
    return [c for c in lattice.classes if lattice.up[c.class_id] == 1 << c.class_id]


def center(group: FiniteGroup) -> set[GroupElement]:
    return {group.element(g) for g in sorted(group.center)}


def cyclic_subgroup(group: FiniteGroup, g: int) -> set[GroupElement]:
    return {group.element(x) for x in group.cyclic_subgroup(g)}


def unique_involution(group: FiniteGroup) -> Optional[GroupElement]:
    z = group.unique_involution()
    return None if z is None else group.element(z)


def pi_of_center(group: FiniteGroup) -> set[int]:
    return {int(p) for p in primefactors(len(group.center))}


def element_weight(group: FiniteGroup, g: int) -> int:
    """Sum of the prime exponents of o(g); 0 for the identity."""
    return sum(factorint(group.element_order(g)).values())


def subgroup(group: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """The subgroup generated by `generators`; `parent_indices` keeps element provenance."""
    gens = [int(g) for g in generators]
    return Subgroup(group, group.generated(gens), gens)


def is_cyclic(lattice: CyclicLattice) -> bool:
    return lattice.classes[-1].subgroup_order == lattice.group.order


def is_generalized_quaternion(lattice: CyclicLattice) -> bool:
    """A non-cyclic 2-group with a single involution."""
    group = lattice.group
    return (
        lattice.prime_set == frozenset({2})
        and not is_cyclic(lattice)
        and group.unique_involution() is not None
    )
