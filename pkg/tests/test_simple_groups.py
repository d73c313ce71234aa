import pytest

from ggraph.components.analysis.twins import has_twins
from ggraph.components.graphs.graph import Graph
from ggraph.exception import InvalidParameter, NotAPrimePower
from ggraph.services.m11_service import M11Service, find_independent_split
from ggraph.services.simple_group_service import SimpleGroupService, psl2_null_predicate


@pytest.fixture
def service(config, graphs) -> SimpleGroupService:
    return SimpleGroupService(config, graphs)


class TestPslPredicate:
    @pytest.mark.parametrize(
        "q, lower, upper, expected",
        [(4, 3, 5, True), (7, 3, 4, True), (9, 4, 5, True), (16, 15, 17, True), (25, 12, 13, False)],
    )
    def test_values(self, q, lower, upper, expected):
        verdict = psl2_null_predicate(q)
        assert (verdict.lower, verdict.upper) == (lower, upper)
        assert verdict.predicate is expected

    def test_not_simple(self):
        with pytest.raises(InvalidParameter):
            psl2_null_predicate(3)

    def test_not_a_prime_power(self):
        with pytest.raises(NotAPrimePower):
            psl2_null_predicate(6)


class TestPslScan:
    def test_small_fields_agree(self, service):
        rows = service.psl2_nullness_scan([4, 5, 7, 8, 9, 11])
        assert [r.q for r in rows] == [4, 5, 7, 8, 9, 11]
        assert all(r.computed_null for r in rows)
        assert all(r.agree for r in rows)
        assert [r.order for r in rows[:3]] == [60, 60, 168]

    def test_frame_columns(self, service):
        frame = service.scan_frame(service.psl2_nullness_scan([4]))
        assert list(frame.columns) == [
            "q", "order", "lower", "upper", "predicate", "computed_null", "difference_edges", "agree",
        ]
        assert frame.loc[0, "difference_edges"] == 0

    def test_groups_over_the_cap_are_reported_not_raised(self, config, service):
        config.order_cap = 100
        rows = service.psl2_nullness_scan([4, 7])
        assert rows[0].agree is True
        assert rows[1].error
        assert rows[1].agree is None

    def test_field_size_limit(self, service):
        with pytest.raises(InvalidParameter):
            service.psl2(128)

    @pytest.mark.slow
    def test_larger_fields(self, service):
        rows = {r.q: r for r in service.psl2_nullness_scan([13, 16, 25])}
        assert rows[13].computed_null and rows[16].computed_null
        assert rows[25].computed_null is False
        assert rows[25].difference_edges > 0
        assert all(r.agree for r in rows.values())


class TestDihedralAndSl34:
    @pytest.mark.parametrize("n", range(3, 16))
    def test_dihedral_reduction(self, service, n):
        assert service.dihedral_reduction_check(n)

    def test_dihedral_reduction_needs_a_polygon(self, service):
        with pytest.raises(InvalidParameter):
            service.dihedral_reduction_check(2)

    def test_sl34_contains_a_quaternion_group(self, service):
        check = service.sl34_quaternion_check()
        assert check.ok, check.violated
        assert (check.subgroup_order, check.involutions, check.order_four) == (8, 1, 6)
        assert len(check.details) == 3


class TestM11:
    def test_independent_split(self):
        # a star: the leaves have degree 1 and are pairwise independent
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert find_independent_split(star, 1) == [1, 2, 3]
        assert find_independent_split(star, 3) == [0]

    @pytest.mark.slow
    def test_pipeline_produces_a_twin_free_graph(self, config, graphs):
        summary, reduced = M11Service(config, graphs).run()
        assert summary.group_order == 7920
        assert summary.reduced_vertices == reduced.n <= summary.difference_vertices
        assert not has_twins(reduced)
        assert set(summary.to_dict()["targets"]) == set(summary.measured())
