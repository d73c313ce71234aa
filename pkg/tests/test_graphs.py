import json

import networkx as nx
import pytest

from ggraph.components.graphs.constructors import (
    GRAPH_KINDS,
    assert_blowup,
    brute_force_graph,
    build_graph,
    class_edge_count,
    class_graph,
    difference_graph,
    difference_graph_undeleted,
    enhanced_difference_graph,
    enhanced_power_graph,
    intersection_power_graph,
    power_graph,
)
from ggraph.components.graphs.export import export, to_json_dict, write_graph
from ggraph.components.graphs.graph import Graph
from ggraph.components.io.graph_loader import GraphLoader
from ggraph.exception import InvalidParameter, InvariantViolation, SchemaError, VertexCapExceeded

SMALL_GROUPS = ["Z(12)", "Z(2) x Z(4)", "D(8)", "Q(8)", "Sym(3)", "Alt(4)", "Z(3) x Q(8)"]


class TestConstruction:
    def test_cyclic_twelve_is_a_four_cycle(self, lattice_of):
        graph = build_graph(lattice_of("Z(12)"), "diff")
        assert (graph.n, graph.edge_count) == (4, 4)
        assert nx.is_isomorphic(graph.to_networkx(), nx.cycle_graph(4))
        assert sorted(graph.elements()) == [2, 3, 9, 10]

    def test_product_of_two_primes_is_null(self, lattice_of):
        assert build_graph(lattice_of("Z(6)"), "diff").n == 0
        assert build_graph(lattice_of("Z(6)"), "diff_undeleted").is_edgeless()

    def test_quaternion_intersection_graph_is_complete(self, lattice_of):
        graph = build_graph(lattice_of("Q(8)"), "ipg")
        assert graph.is_complete()
        assert graph.edge_count == 28

    def test_quaternion_difference_graph_is_octahedral(self, lattice_of):
        graph = build_graph(lattice_of("Q(8)"), "diff")
        assert nx.is_isomorphic(graph.to_networkx(), nx.complete_multipartite_graph(2, 2, 2))

    def test_z4_times_z2_is_not_null(self, lattice_of):
        graph = build_graph(lattice_of("Z(4) x Z(2)"), "diff")
        assert (graph.n, graph.edge_count) == (4, 4)

    def test_enhanced_difference_of_a_cyclic_group(self, lattice_of):
        # the enhanced power graph of Z(n) is complete
        graph = build_graph(lattice_of("Z(6)"), "epg_diff")
        assert (graph.n, graph.edge_count) == (3, 2)

    def test_named_constructors(self, lattice_of):
        lattice = lattice_of("Z(2) x Z(4)")
        named = {
            "power": power_graph,
            "ipg": intersection_power_graph,
            "epg": enhanced_power_graph,
            "diff_undeleted": difference_graph_undeleted,
            "diff": difference_graph,
            "epg_diff": enhanced_difference_graph,
        }
        for kind, construct in named.items():
            assert construct(lattice) == build_graph(lattice, kind)
        assert difference_graph_undeleted(lattice).n == 8

    @pytest.mark.parametrize("spec", SMALL_GROUPS)
    def test_power_graph_spans_into_parents(self, lattice_of, spec):
        lattice = lattice_of(spec)
        power = build_graph(lattice, "power").rows
        for parent in ("ipg", "epg"):
            rows = build_graph(lattice, parent).rows
            assert all(p & ~r == 0 for p, r in zip(power, rows))

    @pytest.mark.parametrize("spec", SMALL_GROUPS)
    @pytest.mark.parametrize("kind", GRAPH_KINDS)
    def test_class_route_matches_definitions(self, lattice_of, spec, kind):
        lattice = lattice_of(spec)
        fast = build_graph(lattice, kind)
        slow = brute_force_graph(lattice.group, kind)
        assert fast.elements() == slow.elements()
        assert fast.rows == slow.rows

    @pytest.mark.parametrize("kind", ["power", "ipg", "diff_undeleted", "epg"])
    def test_edge_count_from_classes(self, lattice_of, kind):
        lattice = lattice_of("Z(3) x Q(8)")
        assert class_edge_count(lattice, kind) == build_graph(lattice, kind).edge_count

    def test_difference_graphs_are_blow_ups(self, lattice_of):
        lattice = lattice_of("Z(3) x Q(8)")
        assert_blowup(lattice, build_graph(lattice, "diff_undeleted"))

    def test_blow_up_check_rejects_a_split_class(self, lattice_of):
        lattice = lattice_of("Z(12)")
        graph = build_graph(lattice, "diff_undeleted")
        rows = list(graph.rows)
        rows[3] &= ~(1 << 2)
        rows[2] &= ~(1 << 3)
        with pytest.raises(InvariantViolation):
            assert_blowup(lattice, Graph(graph.vertices, rows))

    def test_class_graph_of_cyclic_twelve(self, lattice_of):
        graph = class_graph(lattice_of("Z(12)"), "diff")
        assert [v.order for v in graph.vertices] == [4, 6]
        assert [v.weight for v in graph.vertices] == [2, 2]
        assert graph.edge_count == 1

    def test_unknown_kind(self, lattice_of):
        with pytest.raises(InvalidParameter):
            build_graph(lattice_of("Z(4)"), "cayley")

    def test_vertex_cap(self, lattice_of):
        with pytest.raises(VertexCapExceeded):
            build_graph(lattice_of("Z(30)"), "power", vertex_cap=10)


class TestGraph:
    def test_induced_subgraph_keeps_provenance(self, lattice_of):
        graph = build_graph(lattice_of("Z(12)"), "diff_undeleted")
        sub = graph.induced_subgraph([3, 9, 10])
        assert sub.elements() == [3, 9, 10]
        assert sub.edges() == [(0, 2), (1, 2)]

    def test_complement(self):
        path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert sorted(path.complement().edges()) == [(0, 2), (0, 3), (1, 3)]

    def test_self_loops_are_rejected(self):
        with pytest.raises(InvariantViolation):
            Graph.from_edges(2, [(1, 1)])

    def test_networkx_round_trip(self):
        g = nx.petersen_graph()
        graph = Graph.from_networkx(g)
        assert graph.edge_count == 15
        assert nx.is_isomorphic(graph.to_networkx(), g)


class TestExport:
    def test_json_schema(self, lattice_of):
        data = to_json_dict(build_graph(lattice_of("Z(12)"), "diff"))
        assert data["group"] == "Z(12)"
        assert data["kind"] == "diff"
        assert data["n"] == 4
        assert len(data["edges"]) == 4
        assert {v["order"] for v in data["vertices"]} == {4, 6}

    def test_dot_and_csv(self, lattice_of):
        graph = build_graph(lattice_of("Z(12)"), "diff")
        dot = export(graph, "dot").decode()
        assert dot.count("--") == 4
        csv = export(graph, "edge-csv").decode().splitlines()
        assert csv[0] == "u,v"
        assert len(csv) == 5

    def test_output_is_deterministic(self, lattice_of):
        graph = build_graph(lattice_of("Q(8)"), "diff")
        assert export(graph, "json") == export(graph, "json")

    def test_unknown_format(self, lattice_of):
        with pytest.raises(InvalidParameter):
            export(build_graph(lattice_of("Z(4)"), "power"), "gexf")

    def test_written_json_loads_back(self, lattice_of, tmp_path):
        graph = build_graph(lattice_of("Q(8)"), "diff")
        path = write_graph(graph, "json", str(tmp_path / "q8.json"))
        loaded = GraphLoader().load(path)
        assert loaded.rows == graph.rows
        assert loaded.name == "Q(8)"


class TestLoader:
    @pytest.mark.parametrize(
        "data",
        [
            [],
            {"n": -1, "edges": []},
            {"n": 2},
            {"n": 2, "edges": [[0, 5]]},
            {"n": 2, "edges": [[1, 1]]},
            {"n": 2, "edges": [[0, True]]},
            {"n": 2, "edges": [], "vertices": [{"id": 0}]},
        ],
    )
    def test_schema_errors(self, data):
        with pytest.raises(SchemaError):
            GraphLoader().from_dict(data)

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(SchemaError):
            GraphLoader().load(str(path))

    def test_minimal_document(self):
        graph = GraphLoader().from_dict(json.loads('{"n": 3, "edges": [[0, 1], [1, 2]]}'))
        assert graph.edges() == [(0, 1), (1, 2)]
