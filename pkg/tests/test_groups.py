import pytest

from ggraph.components.groups.builders import GroupBuilder, build_group
from ggraph.components.groups.finite_group import ArithmeticGroup
from ggraph.components.groups.galois_field import galois_field
from ggraph.components.groups.spec_parser import parse_group_spec
from ggraph.exception import (
    GroupAxiomViolation,
    GroupSpecSyntaxError,
    InvalidParameter,
    NotAPrimePower,
    OrderLimitExceeded,
)


class TestSpecParser:
    def test_product_factors(self):
        spec = parse_group_spec("Z(3) x Q(8)")
        assert [a.kind for a in spec.factors] == ["Z", "Q"]
        assert spec.text == "Z(3) x Q(8)"
        assert spec.is_product

    def test_alternative_product_signs_and_spacing(self):
        assert parse_group_spec("Z(2)×Z(3)").text == "Z(2) x Z(3)"
        assert parse_group_spec("  PSL( 2 , 7 )  ").text == "PSL(2,7)"

    def test_m11_has_no_parameters(self):
        assert parse_group_spec("M11").factors[0].kind == "M11"

    def test_permutation_atom(self):
        atom = parse_group_spec("Perm((1 2 3), (1 2))").factors[0]
        assert atom.permutations == (((1, 2, 3),), ((1, 2),))

    def test_syntax_error_reports_offset(self):
        with pytest.raises(GroupSpecSyntaxError) as err:
            parse_group_spec("Z(3) y Q(8)")
        assert err.value.position == 5
        assert "'x'" in err.value.expected

    def test_unknown_atom(self):
        with pytest.raises(GroupSpecSyntaxError) as err:
            parse_group_spec("W(3)")
        assert err.value.position == 0

    @pytest.mark.parametrize("text", ["Q(12)", "Q(4)", "D(7)", "PSL(2,6)", "SL(3,4)", "ElemAb(4,2)", "Z(0)"])
    def test_parameters_outside_family(self, text):
        with pytest.raises(InvalidParameter):
            parse_group_spec(text)


class TestBuilders:
    @pytest.mark.parametrize(
        "text, order",
        [
            ("Z(12)", 12),
            ("D(10)", 10),
            ("Q(16)", 16),
            ("Sym(4)", 24),
            ("Alt(5)", 60),
            ("SL(2,3)", 24),
            ("PSL(2,7)", 168),
            ("ElemAb(2,3)", 8),
            ("Z(3) x Q(8)", 24),
            ("Perm((1 2 3), (1 2))", 6),
        ],
    )
    def test_orders(self, text, order):
        assert build_group(text).order == order

    def test_quaternion_orders_and_involution(self):
        q8 = build_group("Q(8)")
        assert q8.order_multiset() == [1, 2, 4, 4, 4, 4, 4, 4]
        assert q8.unique_involution() is not None
        assert not q8.is_abelian

    def test_dihedral_orders_and_centre(self):
        d8 = build_group("D(8)")
        assert d8.order_multiset() == [1, 2, 2, 2, 2, 2, 4, 4]
        assert d8.center == frozenset({0, 2})
        assert d8.unique_involution() is None

    def test_identity_is_index_zero(self):
        group = build_group("Sym(3) x Z(2)")
        assert all(group.multiply(0, g) == g == group.multiply(g, 0) for g in group.elements())

    def test_powers_and_inverse(self):
        z12 = build_group("Z(12)")
        assert z12.powers(4) == (0, 4, 8)
        assert z12.inverse(5) == 7
        assert z12.cyclic_subgroup(3) == frozenset({0, 3, 6, 9})

    def test_generated_subgroup(self):
        s4 = build_group("Sym(4)")
        assert len(s4.generated(s4.generators)) == 24
        assert s4.generated([]) == [0]

    def test_order_cap(self, config):
        config.order_cap = 100
        with pytest.raises(OrderLimitExceeded):
            GroupBuilder(config).build("Sym(5)")

    def test_product_over_cap(self, config):
        config.order_cap = 50
        with pytest.raises(OrderLimitExceeded):
            GroupBuilder(config).build("Z(8) x Z(8)")

    def test_validate_rejects_a_broken_table(self):
        broken = ArithmeticGroup("broken", 3, lambda a, b: (a - b) % 3, str, [1])
        with pytest.raises(GroupAxiomViolation):
            broken.validate()

    @pytest.mark.slow
    def test_m11_order(self):
        assert build_group("M11").order == 7920


class TestGaloisField:
    @pytest.mark.parametrize("q", [4, 8, 9, 16, 25])
    def test_multiplicative_group_is_cyclic(self, q):
        field = galois_field(q)
        assert field.multiplicative_order(field.primitive_element) == q - 1

    def test_every_nonzero_element_has_an_inverse(self):
        field = galois_field(8)
        assert all(field.mul[a, field.inv[a]] == 1 for a in range(1, 8))

    def test_not_a_prime_power(self):
        with pytest.raises(NotAPrimePower):
            galois_field(6)
