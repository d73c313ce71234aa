import asyncio
import json
import os

import networkx as nx
import pytest

from ggraph.components.graphs.export import write_graph
from ggraph.components.graphs.graph import Graph
from ggraph.components.io.graph_loader import GraphLoader
from ggraph.launch_host import launch_async
from ggraph.pipelines.analyze_pipeline import AnalyzePipeline
from ggraph.pipelines.clique_pipeline import CliquePipeline
from ggraph.pipelines.embed_pipeline import EmbedPipeline
from ggraph.pipelines.psl_scan_pipeline import SCAN_FILE, PslScanPipeline
from ggraph.runtime.command_line import CommandLine


def run(*argv: str) -> int:
    return asyncio.run(launch_async(list(argv)))


class TestParsing:
    def test_build_arguments(self):
        args = CommandLine.parse_arguments(["build", "Z(3) x Q(8)", "--kind", "power", "--format=dot"])
        assert args.command == "build"
        assert args.spec == "Z(3) x Q(8)"
        assert (args.kind, args.format, args.level) == ("power", "dot", "element")
        assert {"kind", "format"} <= args._explicit_args
        assert "level" not in args._explicit_args

    def test_verify_arguments(self):
        args = CommandLine.parse_arguments(["verify", "all", "--max-order", "50", "--allow-discrepancy"])
        assert args.claim == "all"
        assert args.max_order == 50
        assert args.allow_discrepancy
        assert {"max_order", "allow_discrepancy"} <= args._explicit_args

    @pytest.mark.parametrize(
        "argv",
        [[], ["build"], ["build", "Z(4)", "--kind", "cayley"], ["clique", "0"], ["clique", "x"], ["explode"]],
    )
    def test_input_errors_exit_with_two(self, argv):
        with pytest.raises(SystemExit) as err:
            CommandLine.parse_arguments(argv)
        assert err.value.code == 2


class TestExitCodes:
    def test_build_writes_the_graph(self, tmp_path):
        out = tmp_path / "z12.json"
        assert run("build", "Z(12)", "--out", str(out)) == 0
        graph = GraphLoader().load(str(out))
        assert (graph.n, graph.edge_count) == (4, 4)

    def test_build_default_path_uses_out_dir(self, tmp_path):
        assert run("build", "Q(8)", "--kind", "ipg", "--format", "edge-csv", "--out-dir", str(tmp_path)) == 0
        assert os.path.exists(tmp_path / "Q_8_ipg.csv")

    def test_class_level_build(self, tmp_path):
        out = tmp_path / "z12_classes.json"
        assert run("build", "Z(12)", "--level", "class", "--out", str(out)) == 0
        assert GraphLoader().load(str(out)).n == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["build", "Z(3) y Q(8)"],
            ["build", "Q(12)"],
            ["build", "Z(30)", "--vertex-cap", "10"],
            ["build", "Sym(6)", "--order-cap", "100"],
            ["build", "Z(4)", "--order-cap", "0"],
            ["verify", "t:nothing"],
            ["embed", "does-not-exist.json"],
        ],
    )
    def test_bad_input_is_exit_two(self, argv):
        assert run(*argv) == 2

    def test_discrepancy_needs_acknowledgement(self):
        assert run("verify", "t:isol", "--max-order", "12") == 1
        assert run("verify", "t:isol", "--max-order", "12", "--allow-discrepancy") == 0

    def test_verify_writes_a_report(self, config):
        assert run("verify", "t:twoprimes", "--max-order", "20") == 0
        path = os.path.join(config.REPORTS_DIR, "t_twoprimes.json")
        with open(path, encoding="utf-8") as f:
            assert json.load(f)["outcome"] == "PASS"

    def test_exhausted_or_skipped_searches_are_exit_three(self):
        assert run("verify", "psl2", "--order-cap", "100") == 3

    def test_clique_and_embed(self, tmp_path):
        assert run("clique", "30") == 0
        path = write_graph(Graph.from_networkx(nx.petersen_graph()), "json", str(tmp_path / "petersen.json"))
        assert run("embed", path) == 0

    def test_psl_scan(self):
        assert run("psl-scan", "--qmax", "7") == 0


class TestPipelines:
    def test_analyze_report(self):
        report = asyncio.run(AnalyzePipeline().run("Q(8)", "power"))
        assert report["order"] == 8
        assert report["diameter"] == 2
        assert report["cograph"] is True

    def test_clique_report(self):
        report = asyncio.run(CliquePipeline().run(12, "ipg"))
        assert report["value"] == report["exact"] == 10
        assert report["agrees"]

    def test_embed_report(self, tmp_path):
        path = write_graph(Graph.from_networkx(nx.cycle_graph(5)), "json", str(tmp_path / "c5.json"))
        report = asyncio.run(EmbedPipeline().run(path))
        assert report["verified"]
        assert report["sperner"]
        assert report["ground_set"] == 10
        assert len(report["assignment"]) == 10

    def test_psl_scan_table(self, config):
        config.psl_qmax = 8
        pipeline = PslScanPipeline()
        frame = asyncio.run(pipeline.run())
        assert list(frame["q"]) == [4, 5, 7, 8]
        assert pipeline.disagreements == []
        assert os.path.exists(os.path.join(config.REPORTS_DIR, SCAN_FILE))
