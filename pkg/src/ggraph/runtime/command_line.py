import sys
from argparse import ArgumentParser
from typing import Optional, Sequence

from ggraph.components.divisors.divisor_lattice import DIVISOR_KINDS
from ggraph.components.graphs.constructors import GRAPH_KINDS
from ggraph.components.graphs.export import EXPORT_FORMATS
from ggraph.models.command_line_args import CommandLineArgs

from .logging_argument_parser import LoggingArgumentParser


def _add_common_arguments(parser: ArgumentParser):
    parser.add_argument("--config", type=str, help="Path to YAML config file")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--search-budget", dest="search_budget", type=int, help="Node expansions for exhaustive searches")
    parser.add_argument("--order-cap", dest="order_cap", type=int, help="Largest group order accepted")
    parser.add_argument("--vertex-cap", dest="vertex_cap", type=int, help="Largest element-level graph materialised")
    parser.add_argument("--out-dir", dest="out_dir", type=str, help="Directory for graph files")


def _was_typed(option: str, argv: Sequence[str]) -> bool:
    return any(arg == option or arg.startswith(option + "=") for arg in argv)


class CommandLine:
    @staticmethod
    def parse_arguments(argv: Optional[Sequence[str]] = None) -> CommandLineArgs:
        """
        Parse command-line arguments and return a CommandLineArgs object.

        Subcommands: build, analyze, verify, clique, embed, psl-scan, m11.
        """
        argv = list(sys.argv[1:] if argv is None else argv)
        parser = LoggingArgumentParser(
            prog="ggraph",
            description="Power graphs, intersection power graphs and their difference graph for finite groups.",
        )

        subparsers = parser.add_subparsers(dest="command", help="Available subcommands")

        # === BUILD Subcommand ===
        build_parser = subparsers.add_parser("build", help="Build a graph and write it to a file")
        build_parser.add_argument("spec", type=str, help='Group spec, e.g. "Z(3) x Q(8)"')
        build_parser.add_argument("--kind", choices=GRAPH_KINDS, default="diff", help="Graph kind")
        build_parser.add_argument("--format", choices=EXPORT_FORMATS, default="json", help="Output format")
        build_parser.add_argument("--out", type=str, help="Output path (default: <out-dir>/<spec>_<kind>)")
        build_parser.add_argument(
            "--level", choices=("element", "class"), default="element", help="Element graph or generator-class quotient"
        )
        _add_common_arguments(build_parser)

        # === ANALYZE Subcommand ===
        analyze_parser = subparsers.add_parser("analyze", help="Print graph measurements as JSON")
        analyze_parser.add_argument("spec", type=str, help="Group spec")
        analyze_parser.add_argument("--kind", choices=GRAPH_KINDS, default="diff", help="Graph kind")
        _add_common_arguments(analyze_parser)

        # === VERIFY Subcommand ===
        verify_parser = subparsers.add_parser("verify", help="Sweep a claim over its group catalog")
        verify_parser.add_argument("claim", type=str, help='Claim id, comma-separated ids, or "all"')
        verify_parser.add_argument("--max-order", dest="max_order", type=int, help="Bound for the swept catalogs")
        verify_parser.add_argument(
            "--allow-discrepancy",
            dest="allow_discrepancy",
            action="store_true",
            help="Exit 0 when claims end in a documented DISCREPANCY",
        )
        _add_common_arguments(verify_parser)

        # === CLIQUE Subcommand ===
        clique_parser = subparsers.add_parser("clique", help="Clique number of a graph on Z(n) via divisors")
        clique_parser.add_argument("n", type=int, help="Order of the cyclic group")
        clique_parser.add_argument("--kind", choices=DIVISOR_KINDS, default="diff", help="Graph kind")
        _add_common_arguments(clique_parser)

        # === EMBED Subcommand ===
        embed_parser = subparsers.add_parser("embed", help="Embed a graph file into D(Z_n)")
        embed_parser.add_argument("graph_file", type=str, help="Graph in the JSON graph schema")
        _add_common_arguments(embed_parser)

        # === PSL-SCAN Subcommand ===
        psl_parser = subparsers.add_parser("psl-scan", help="Null difference graphs of PSL(2,q)")
        psl_parser.add_argument("--qmax", type=int, help="Largest q scanned")
        _add_common_arguments(psl_parser)

        # === M11 Subcommand ===
        m11_parser = subparsers.add_parser("m11", help="Twin-reduce the difference graph of M11")
        _add_common_arguments(m11_parser)

        args = parser.parse_args(argv)

        if args.command is None:
            parser.error("a subcommand is required")

        subparser = {
            "build": build_parser,
            "analyze": analyze_parser,
            "verify": verify_parser,
            "clique": clique_parser,
            "embed": embed_parser,
            "psl-scan": psl_parser,
            "m11": m11_parser,
        }[args.command]

        # Track which args were explicitly passed on CLI
        explicit = set()
        for action in subparser._actions:
            if any(_was_typed(opt, argv) for opt in action.option_strings):
                explicit.add(action.dest)

        if args.command == "clique" and args.n < 1:
            subparser.error(f"n must be positive, got {args.n}")

        return CommandLineArgs(
            command=args.command,
            _explicit_args=explicit,
            config=args.config,
            debug=args.debug,
            spec=getattr(args, "spec", None),
            kind=getattr(args, "kind", "diff"),
            format=getattr(args, "format", "json"),
            out=getattr(args, "out", None),
            level=getattr(args, "level", "element"),
            claim=getattr(args, "claim", None),
            max_order=getattr(args, "max_order", None),
            allow_discrepancy=getattr(args, "allow_discrepancy", False),
            n=getattr(args, "n", None),
            graph_file=getattr(args, "graph_file", None),
            qmax=getattr(args, "qmax", None),
            search_budget=args.search_budget,
            order_cap=args.order_cap,
            vertex_cap=args.vertex_cap,
            out_dir=args.out_dir,
        )
