import networkx as nx
import pytest

from ggraph.components.analysis.cliques import (
    class_clique,
    is_clique,
    is_independent,
    max_clique,
    max_weight_clique,
)
from ggraph.components.analysis.cograph import find_induced_p4, is_cograph
from ggraph.components.analysis.difference import (
    even_order_clique_check,
    even_order_fraction,
    isolated_classes,
    isolated_element_indices,
    isolated_vertices_of_difference,
    odd_elements_are_powers_of_shift,
)
from ggraph.components.analysis.measures import analyze, analyze_blowup, girth, two_coloring
from ggraph.components.analysis.odd_holes import find_odd_hole, is_induced_cycle, is_perfect
from ggraph.components.analysis.twins import closed_twin_reduce, has_twins, open_twin_reduce, twin_reduce
from ggraph.components.graphs.constructors import build_graph, class_graph
from ggraph.components.graphs.graph import Graph
from ggraph.exception import BudgetExceeded, InvalidParameter, PreconditionFailed, VertexCapExceeded


def cycle(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def path(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def octahedron() -> Graph:
    return Graph.from_networkx(nx.complete_multipartite_graph(2, 2, 2))


class TestMeasures:
    def test_four_cycle(self, lattice_of):
        result = analyze(build_graph(lattice_of("Z(12)"), "diff"))
        assert (result.n, result.edges) == (4, 4)
        assert result.connected
        assert result.diameter == 2
        assert result.girth == 4
        assert result.bipartite
        assert result.eulerian
        assert result.degree_set == [2]

    def test_disconnected_graph_has_infinite_diameter(self):
        graph = Graph.from_edges(4, [(0, 1), (2, 3)])
        result = analyze(graph)
        assert result.diameter is None
        assert result.component_diameters == [1, 1]
        assert result.to_dict()["diameter"] == "inf"
        assert not result.eulerian

    def test_two_disjoint_triangles(self):
        graph = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        result = analyze(graph)
        assert result.diameter is None
        assert result.girth == 3
        assert not result.bipartite
        assert result.coloring is None
        assert result.eulerian_per_component
        assert not result.eulerian
        assert result.component_sizes == [3, 3]

    @pytest.mark.parametrize("seed", range(5))
    def test_agrees_with_networkx(self, seed):
        g = nx.gnp_random_graph(18, 0.3, seed=seed)
        result = analyze(Graph.from_networkx(g))
        assert len(result.components) == nx.number_connected_components(g)
        assert result.bipartite == nx.is_bipartite(g)
        if nx.is_connected(g):
            assert result.diameter == nx.diameter(g)

    @pytest.mark.parametrize("g, expected", [(nx.petersen_graph(), 5), (nx.cycle_graph(7), 7), (nx.path_graph(5), None)])
    def test_girth(self, g, expected):
        assert girth(Graph.from_networkx(g).rows) == expected

    def test_two_coloring(self):
        colouring = two_coloring(cycle(6))
        assert all(colouring[u] != colouring[v] for u, v in cycle(6).edges())
        assert two_coloring(cycle(5)) is None

    @pytest.mark.parametrize("spec", ["Z(12)", "Q(8)", "Z(4) x Z(2)", "Z(3) x Q(8)", "Z(60)", "Sym(4)"])
    def test_blow_up_measures_match_the_element_graph(self, lattice_of, spec):
        lattice = lattice_of(spec)
        direct = analyze(build_graph(lattice, "diff"))
        blown = analyze_blowup(class_graph(lattice, "diff"))
        for field in ("n", "edges", "diameter", "girth", "bipartite", "eulerian", "degree_set", "component_sizes"):
            assert getattr(blown, field) == getattr(direct, field), field

    def test_blow_up_reports_group_elements(self, lattice_of):
        blown = analyze_blowup(class_graph(lattice_of("Z(12)"), "diff"))
        assert blown.components == [[2, 3, 9, 10]]


class TestTwins:
    def test_octahedron_collapses_to_a_point(self):
        reduction = twin_reduce(octahedron())
        assert reduction.reduced.n == 1
        assert (reduction.open_merges, reduction.closed_merges) == (3, 2)
        assert reduction.rounds == 1
        assert reduction.representatives == [0]
        assert set(reduction.class_map) == {0}

    def test_twin_free_graphs_are_unchanged(self):
        for graph in (path(4), cycle(5)):
            assert twin_reduce(graph).reduced.n == graph.n

    def test_single_kind_reductions(self):
        assert open_twin_reduce(octahedron()).n == 3
        assert closed_twin_reduce(octahedron()).n == 6
        complete = Graph.from_networkx(nx.complete_graph(4))
        assert closed_twin_reduce(complete).n == 1
        assert open_twin_reduce(complete).n == 4

    @staticmethod
    def planted(seed: int) -> Graph:
        g = nx.gnp_random_graph(12, 0.35, seed=seed)
        for v in range(0, 12, 3):
            twin = g.number_of_nodes()
            g.add_node(twin)
            g.add_edges_from((twin, u) for u in list(g.neighbors(v)))
            if v % 2:
                g.add_edge(twin, v)
        return Graph.from_networkx(g)

    @pytest.mark.parametrize("seed", range(8))
    def test_reduced_graph_has_no_twins(self, seed):
        graph = self.planted(seed)
        reduction = twin_reduce(graph)
        assert reduction.reduced.n < graph.n
        assert not has_twins(reduction.reduced)

    @pytest.mark.parametrize("seed", range(8))
    def test_class_map_reproduces_adjacency(self, seed):
        graph = self.planted(seed)
        reduction = twin_reduce(graph)
        cmap = reduction.class_map
        for u in range(graph.n):
            for v in range(u + 1, graph.n):
                if cmap[u] != cmap[v]:
                    assert graph.adjacent(u, v) == reduction.reduced.adjacent(cmap[u], cmap[v])
        assert [cmap[r] for r in reduction.representatives] == list(range(reduction.reduced.n))


class TestCograph:
    def test_path_witness(self):
        graph = path(4)
        verdict = is_cograph(graph)
        assert not verdict.is_cograph
        a, b, c, d = verdict.witness
        assert graph.adjacent(a, b) and graph.adjacent(b, c) and graph.adjacent(c, d)
        assert not (graph.adjacent(a, c) or graph.adjacent(b, d) or graph.adjacent(a, d))

    def test_complete_multipartite_is_a_cograph(self):
        assert find_induced_p4(octahedron()) is None

    @pytest.mark.parametrize("spec, expected", [("Z(8)", True), ("Z(6)", True), ("Z(15)", True), ("Z(12)", False)])
    def test_power_graphs_of_cyclic_groups(self, lattice_of, spec, expected):
        graph = class_graph(lattice_of(spec), "power")
        assert is_cograph(graph).is_cograph is expected

    def test_vertex_cap(self):
        with pytest.raises(VertexCapExceeded):
            is_cograph(path(4), vertex_cap=2)


class TestOddHoles:
    @pytest.mark.parametrize("n", [5, 7])
    def test_odd_cycles_are_holes(self, n):
        graph = cycle(n)
        hole = find_odd_hole(graph)
        assert len(hole) == n
        assert is_induced_cycle(graph, hole)

    def test_even_cycle_has_no_odd_hole(self):
        assert find_odd_hole(cycle(6)) is None

    def test_petersen_hole(self):
        graph = Graph.from_networkx(nx.petersen_graph())
        hole = find_odd_hole(graph)
        assert len(hole) % 2 == 1 and len(hole) >= 5
        assert is_induced_cycle(graph, hole)

    @pytest.mark.parametrize("max_len", [2, 3, 4])
    def test_short_length_limits_are_rejected(self, max_len):
        with pytest.raises(InvalidParameter):
            find_odd_hole(cycle(5), max_len=max_len)

    def test_default_limit_on_tiny_graphs(self):
        assert find_odd_hole(cycle(3)) is None
        assert find_odd_hole(Graph.from_edges(1, [])) is None
        assert find_odd_hole(cycle(5), max_len=5) is not None

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            find_odd_hole(cycle(5), budget=1)

    def test_is_induced_cycle_rejects_chords(self):
        graph = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        assert not is_induced_cycle(graph, [0, 1, 2, 3])

    def test_antihole_is_found_in_the_complement(self):
        verdict = is_perfect(cycle(7).complement())
        assert verdict.status == "imperfect"
        assert verdict.in_complement
        assert len(verdict.witness) == 7

    def test_perfect_after_twin_reduction(self):
        verdict = is_perfect(octahedron())
        assert verdict.perfect is True
        assert verdict.reduced_vertices == 1

    def test_exhausted_budget_is_unknown(self):
        verdict = is_perfect(cycle(9), budget=1)
        assert verdict.status == "unknown"
        assert verdict.perfect is None

    @pytest.mark.parametrize(
        "spec, perfect",
        [("Z(30)", True), ("Z(60)", False), ("Z(210)", False), ("Z(2) x Z(2) x Z(15)", False)],
    )
    def test_difference_graphs_of_three_prime_groups(self, lattice_of, spec, perfect):
        graph = class_graph(lattice_of(spec), "diff")
        verdict = is_perfect(graph)
        assert verdict.perfect is perfect
        if not perfect:
            target = graph.complement() if verdict.in_complement else graph
            assert is_induced_cycle(target, verdict.witness)

    def test_five_hole_of_z60_by_orders(self, lattice_of):
        lattice = lattice_of("Z(60)")
        by_order = {c.subgroup_order: c.class_id for c in lattice.classes}
        hole = [by_order[o] for o in (4, 6, 15, 12, 30)]
        assert is_induced_cycle(class_graph(lattice, "diff_undeleted"), hole)


class TestDifferenceHelpers:
    def test_isolated_classes(self, lattice_of):
        assert len(isolated_classes(lattice_of("Z(6)"))) == 4
        assert isolated_element_indices(lattice_of("Z(12)")) == {0, 1, 4, 5, 6, 7, 8, 11}

    def test_isolated_vertices_are_group_elements(self, graphs):
        isolated = isolated_vertices_of_difference(graphs.group("Z(12)"))
        assert {x.index for x in isolated} == {0, 1, 4, 5, 6, 7, 8, 11}
        assert {x.order for x in isolated} == {1, 2, 3, 12}

    @pytest.mark.parametrize("spec", ["Q(8)", "Z(12)", "Z(3) x Q(8)", "Q(16)"])
    def test_unique_involution_groups(self, graphs, spec):
        group = graphs.group(spec)
        assert even_order_clique_check(group)
        assert odd_elements_are_powers_of_shift(group)

    def test_preconditions(self, graphs):
        with pytest.raises(PreconditionFailed):
            even_order_clique_check(graphs.group("D(8)"))
        with pytest.raises(PreconditionFailed):
            odd_elements_are_powers_of_shift(graphs.group("Z(2) x Z(2)"))

    def test_even_order_fraction(self, graphs):
        assert even_order_fraction(graphs.group("Z(12)")) == 0.75
        assert even_order_fraction(graphs.group("Q(8)")) == 7 / 8


class TestCliques:
    def test_power_graph_of_a_cyclic_p_group_is_complete(self, lattice_of):
        assert len(max_clique(build_graph(lattice_of("Z(8)"), "power"))) == 8
        assert len(class_clique(lattice_of("Z(8)"), "power")) == 8

    @pytest.mark.parametrize("spec, size", [("Z(30)", 3), ("Z(12)", 2)])
    def test_difference_clique_numbers(self, lattice_of, spec, size):
        assert len(class_clique(lattice_of(spec), "diff")) == size

    @pytest.mark.parametrize("spec", ["Z(12)", "D(8)", "Q(8)", "Alt(4)", "Z(3) x Q(8)"])
    @pytest.mark.parametrize("kind", ["power", "ipg", "epg", "diff"])
    def test_class_route_matches_element_search(self, lattice_of, spec, kind):
        lattice = lattice_of(spec)
        graph = build_graph(lattice, kind)
        assert len(class_clique(lattice, kind)) == len(max_clique(graph))

    @pytest.mark.parametrize("seed", range(4))
    def test_agrees_with_networkx(self, seed):
        g = nx.gnp_random_graph(30, 0.5, seed=seed)
        graph = Graph.from_networkx(g)
        clique = max_clique(graph)
        assert is_clique(graph, clique)
        assert len(clique) == max(len(c) for c in nx.find_cliques(g))

    def test_weighted(self):
        rows = path(3).rows
        assert max_weight_clique(rows, [1, 5, 2]) == ([1, 2], 7)

    def test_clique_and_independence_checks(self):
        graph = cycle(4)
        assert is_clique(graph, [0, 1])
        assert not is_clique(graph, [0, 2])
        assert is_independent(graph, [0, 2])

    def test_budget_and_cap(self):
        graph = Graph.from_networkx(nx.petersen_graph())
        with pytest.raises(BudgetExceeded):
            max_clique(graph, budget=1)
        with pytest.raises(VertexCapExceeded):
            max_clique(graph, vertex_cap=5)
