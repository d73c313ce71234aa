import asyncio
import sys

from ggraph.config.config import Config
from ggraph.exception import EXIT_CLAIM_FAILED, EXIT_OK, CustomException, GGraphError
from ggraph.logger_manager import LoggerManager
from ggraph.models.command_line_args import CommandLineArgs
from ggraph.pipelines.analyze_pipeline import AnalyzePipeline
from ggraph.pipelines.build_pipeline import BuildPipeline
from ggraph.pipelines.clique_pipeline import CliquePipeline
from ggraph.pipelines.embed_pipeline import EmbedPipeline
from ggraph.pipelines.m11_pipeline import M11Pipeline
from ggraph.pipelines.psl_scan_pipeline import PslScanPipeline
from ggraph.pipelines.verify_pipeline import VerifyPipeline, exit_code_for

logging = LoggerManager.get_logger(__name__)


class Host:
    """
    Host class to manage the execution of the main application.

    Loads the YAML config and CLI overrides, then dispatches the subcommand
    to its pipeline. `run_async` returns the process exit code.
    """

    def __init__(self, args: CommandLineArgs):
        self.args = args
        self.config = Config()

        # Load config from YAML if provided
        if args.config:
            self.config.config_path = args.config
            self.config.load_from_yaml(args.config)

        # Apply CLI overrides if any
        self.config.apply_cli_overrides(args)

    def run(self) -> int:
        return asyncio.run(self.run_async())

    async def run_async(self) -> int:
        try:
            logging.info("🚀 Starting host operations.")
            command = self.args.command

            if command == "build":
                await BuildPipeline().run(
                    self.args.spec, self.args.kind, self.args.format, self.args.out, self.args.level
                )
                return EXIT_OK
            if command == "analyze":
                await AnalyzePipeline().run(self.args.spec, self.args.kind)
                return EXIT_OK
            if command == "verify":
                return await VerifyPipeline().run(self.args.claim)
            if command == "clique":
                report = await CliquePipeline().run(self.args.n, self.args.kind)
                return EXIT_OK if report.get("agrees", True) else EXIT_CLAIM_FAILED
            if command == "embed":
                report = await EmbedPipeline().run(self.args.graph_file)
                return EXIT_OK if report["verified"] else EXIT_CLAIM_FAILED
            if command == "psl-scan":
                pipeline = PslScanPipeline()
                await pipeline.run()
                return EXIT_CLAIM_FAILED if pipeline.disagreements else EXIT_OK
            if command == "m11":
                report = await M11Pipeline().run()
                return exit_code_for([report.outcome], self.config.allow_discrepancy)

            logging.error(f"❌ Unknown subcommand: {command}")
            raise ValueError(
                "Please specify a valid subcommand: build, analyze, verify, clique, embed, psl-scan or m11."
            )

        except GGraphError as e:
            logging.error("🔥 %s: %s", type(e).__name__, e)
            raise
        except Exception as e:
            logging.error("💥 An unexpected error occurred: %s", e)
            raise CustomException(e, sys) from e
        finally:
            logging.info("✅ Shutting down host gracefully.")
