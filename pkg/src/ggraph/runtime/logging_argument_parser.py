from argparse import ArgumentParser

from ggraph.exception import EXIT_INPUT_ERROR
from ggraph.logger_manager import LoggerManager

logging = LoggerManager.get_logger(__name__)


class LoggingArgumentParser(ArgumentParser):
    """
    ArgumentParser that logs parse errors and exits with the input-error code.
    """

    def error(self, message: str):
        logging.error("Argument parsing error: %s", message)
        self.print_help()
        raise SystemExit(EXIT_INPUT_ERROR)
