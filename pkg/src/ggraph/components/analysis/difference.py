from typing import Optional

from ggraph.components.graphs.constructors import class_adjacency
from ggraph.components.groups.cyclic_lattice import CyclicLattice, generator_classes
from ggraph.components.groups.finite_group import FiniteGroup, GroupElement
from ggraph.exception import PreconditionFailed
from ggraph.utils.bit_utils import iter_bits


def isolated_classes(lattice: CyclicLattice) -> list[int]:
    """Class ids of zero degree in the undeleted difference graph."""
    return [c for c, row in enumerate(class_adjacency(lattice, "diff_undeleted")) if not row]


def isolated_vertices_of_difference(
    group: FiniteGroup, lattice: Optional[CyclicLattice] = None
) -> set[GroupElement]:
    lattice = lattice or generator_classes(group)
    return {
        group.element(x) for c in isolated_classes(lattice) for x in lattice.classes[c].members
    }


def isolated_element_indices(lattice: CyclicLattice) -> set[int]:
    return {x for c in isolated_classes(lattice) for x in lattice.classes[c].members}


def even_order_clique_check(group: FiniteGroup, lattice: Optional[CyclicLattice] = None) -> bool:
    """
    Whether the even-order elements are pairwise adjacent in the intersection
    power graph. Requires a unique involution.
    """
    if group.unique_involution() is None:
        raise PreconditionFailed(f"{group.name} does not have a unique involution")
    lattice = lattice or generator_classes(group)
    rows = class_adjacency(lattice, "ipg")
    even = 0
    for cls in lattice.classes:
        if cls.subgroup_order % 2 == 0:
            even |= 1 << cls.class_id
    return all(even & ~(rows[c] | (1 << c)) == 0 for c in iter_bits(even))


def even_order_fraction(group: FiniteGroup) -> float:
    """Share of elements with even order."""
    evens = sum(1 for g in range(group.order) if group.element_order(g) % 2 == 0)
    return evens / group.order


def odd_elements_are_powers_of_shift(group: FiniteGroup) -> bool:
    """
    With z the unique involution, every odd-order g is a power of gz.
    """
    z = group.unique_involution()
    if z is None:
        raise PreconditionFailed(f"{group.name} does not have a unique involution")
    for g in range(group.order):
        if group.element_order(g) % 2 == 1 and g not in group.cyclic_subgroup(group.multiply(g, z)):
            return False
    return True
