import logging
import os
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler

from ggraph.config.config import Config
from ggraph.core.log_formatters import JsonFormatter, RelativePathFormatter


class LoggerManager:
    """Creates console + rotating-file loggers that share one format and level."""

    LOG_FILE = f"ggraph_{datetime.now().strftime('%m_%d_%Y_%H_%M_%S')}.log"
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
    LOG_JSON = os.getenv("LOG_JSON", "false").lower() == "true"
    LOG_TO_FILE = os.getenv("GGRAPH_LOG_TO_FILE", "true").lower() == "true"

    PLAIN_FORMATTER = RelativePathFormatter(
        "[ %(asctime)s ] %(levelname)s [%(relativepath)s:%(lineno)d] - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    _managed: set[str] = set()

    @classmethod
    def set_log_level(cls, level):
        """Dynamically set the logging level of every logger created here."""
        cls.LOG_LEVEL = level
        for name in cls._managed:
            logger = logging.getLogger(name)
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)

    @classmethod
    def _formatter(cls) -> logging.Formatter:
        return JsonFormatter() if cls.LOG_JSON else cls.PLAIN_FORMATTER

    @staticmethod
    def get_logger(name: str) -> logging.Logger:
        """Get a logger with the specified name and the project's handlers."""
        logger = logging.getLogger(name)
        logger.setLevel(LoggerManager.LOG_LEVEL)
        logger.propagate = False
        LoggerManager._managed.add(name)

        if not logger.hasHandlers():
            formatter = LoggerManager._formatter()

            if LoggerManager.LOG_TO_FILE:
                log_dir = Config().LOG_DIR
                os.makedirs(log_dir, exist_ok=True)
                file_handler = RotatingFileHandler(
                    os.path.join(log_dir, LoggerManager.LOG_FILE),
                    maxBytes=5 * 1024 * 1024,
                    backupCount=5,
                    encoding="utf-8",
                )
                file_handler.setFormatter(formatter)
                logger.addHandler(file_handler)

            console_handler = logging.StreamHandler(sys.stdout)
            console_handler.setFormatter(formatter)
            logger.addHandler(console_handler)

        return logger
