import pytest

from ggraph.components.groups.cyclic_lattice import (
    center,
    element_weight,
    generator_classes,
    is_cyclic,
    is_generalized_quaternion,
    maximal_cyclic_classes,
    pi_of_center,
    subgroup,
    unique_involution,
)


def test_classes_of_a_cyclic_group(lattice_of):
    lattice = lattice_of("Z(12)")
    assert lattice.subgroup_orders == [1, 2, 3, 4, 6, 12]
    assert lattice.sizes == [1, 1, 2, 2, 2, 4]
    assert lattice.identity_class == 0
    assert lattice.prime_set == frozenset({2, 3})


def test_classes_partition_the_group(lattice_of):
    lattice = lattice_of("Sym(4)")
    members = sorted(x for c in lattice.classes for x in c.members)
    assert members == list(range(24))
    assert all(lattice.class_of[x] == c.class_id for c in lattice.classes for x in c.members)


def test_containment_relations(lattice_of):
    lattice = lattice_of("Z(12)")
    by_order = {c.subgroup_order: c.class_id for c in lattice.classes}
    assert lattice.contains(by_order[12], by_order[4])
    assert lattice.contains(by_order[6], by_order[3])
    assert not lattice.comparable(by_order[4], by_order[6])
    assert lattice.meets_nontrivially(by_order[4], by_order[6])
    assert not lattice.meets_nontrivially(by_order[3], by_order[4])


def test_quaternion_maximal_classes_share_the_involution(lattice_of):
    lattice = lattice_of("Q(8)")
    maximal = maximal_cyclic_classes(lattice)
    assert [c.subgroup_order for c in maximal] == [4, 4, 4]
    ids = [c.class_id for c in maximal]
    assert all(lattice.meets_nontrivially(a, b) for a in ids for b in ids if a != b)


def test_klein_four_maximal_classes_meet_trivially(lattice_of):
    lattice = lattice_of("Z(2) x Z(2)")
    ids = [c.class_id for c in maximal_cyclic_classes(lattice)]
    assert len(ids) == 3
    assert not any(lattice.meets_nontrivially(a, b) for a in ids for b in ids if a != b)


@pytest.mark.parametrize(
    "spec, cyclic, quaternion",
    [
        ("Z(12)", True, False),
        ("Z(8)", True, False),
        ("Z(2) x Z(6)", False, False),
        ("Q(16)", False, True),
        ("D(8)", False, False),
        ("Z(2) x Q(8)", False, False),
    ],
)
def test_cyclic_and_generalized_quaternion(lattice_of, spec, cyclic, quaternion):
    lattice = lattice_of(spec)
    assert is_cyclic(lattice) is cyclic
    assert is_generalized_quaternion(lattice) is quaternion


def test_element_weight(graphs):
    z12 = graphs.group("Z(12)")
    assert element_weight(z12, 1) == 3
    assert element_weight(z12, 6) == 1
    assert element_weight(z12, 0) == 0


def test_centre_and_its_primes(graphs):
    group = graphs.group("Z(3) x Q(8)")
    assert len(center(group)) == 6
    assert pi_of_center(group) == {2, 3}
    assert pi_of_center(graphs.group("Sym(3)")) == set()


def test_unique_involution(graphs):
    assert unique_involution(graphs.group("Q(16)")).order == 2
    assert unique_involution(graphs.group("Z(2) x Z(2)")) is None


def test_subgroup_keeps_provenance(graphs):
    z12 = graphs.group("Z(12)")
    h = subgroup(z12, [4])
    assert h.order == 3
    assert h.parent_indices == (0, 4, 8)
    assert [h.element_order(g) for g in h.elements()] == [1, 3, 3]


def test_generator_classes_of_the_quaternion_group(graphs):
    lattice = generator_classes(graphs.group("Q(8)"))
    assert sorted(lattice.subgroup_orders) == [1, 2, 4, 4, 4]
    assert sorted(lattice.sizes) == [1, 1, 2, 2, 2]
