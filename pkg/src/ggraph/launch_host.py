"""
Launch the asynchronous system.

Parses command-line arguments, creates a Host instance, runs it and exits
with the code the CLI contract assigns to the outcome.
"""

import asyncio
import sys
from typing import Optional, Sequence

from ggraph.exception import EXIT_INPUT_ERROR, CustomException, GGraphError
from ggraph.host import Host
from ggraph.logger_manager import LoggerManager
from ggraph.runtime.command_line import CommandLine

logging = LoggerManager.get_logger(__name__)


async def launch_async(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main asynchronous launch point.

    Returns the exit code: 0 success, 1 claim FAIL, 2 input error,
    3 budget exhausted.
    """
    try:
        args = CommandLine.parse_arguments(argv)
        logging.info("Launching host with arguments: %s", args)

        if args.debug:
            LoggerManager.set_log_level("DEBUG")

        instance = Host(args)
        return await instance.run_async()
    except GGraphError as e:
        return e.exit_code
    except CustomException as e:
        logging.error("Unexpected error occurred: %s", e)
        return e.exit_code
    except ValueError as e:
        logging.error("ValueError: %s", e)
        return EXIT_INPUT_ERROR
    except KeyboardInterrupt:
        logging.info("Execution interrupted by user.")
        return 130


def launch():
    sys.exit(asyncio.run(launch_async()))


if __name__ == "__main__":
    launch()
