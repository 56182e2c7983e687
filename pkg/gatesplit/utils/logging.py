"""
Logging for gatesplit.

One ``gatesplit`` logger tree, configured once per CLI run. Human-readable
lines go to stderr (stdout carries the JSON result); ``--log-file`` adds a
plain-text copy that always records DEBUG, so a quiet run can still be
diagnosed afterwards.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union

from .colors import Colors

ROOT_NAME = 'gatesplit'
CONSOLE_FORMAT = '%(message)s'
FILE_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
FILE_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
LABEL_WIDTH = 18
RULE_WIDTH = 70


def console_level(verbose: bool = False, quiet: bool = False) -> int:
    """Console threshold for the global flags; ``--quiet`` wins over ``--verbose``."""
    if quiet:
        return logging.WARNING
    return logging.DEBUG if verbose else logging.INFO


class ColoredFormatter(logging.Formatter):
    """Colors whole console records by level. File output never uses this."""

    def __init__(self, fmt: Optional[str] = CONSOLE_FORMAT, use_colors: bool = True):
        super().__init__(fmt)
        self.use_colors = use_colors

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        if not self.use_colors:
            return text
        return Colors.paint(Colors.for_level(record.levelno), text)


class Logger:
    """
    Process-wide facade over the ``gatesplit`` stdlib logger.

    Modules either call the level methods here directly or ask for a child
    logger (``get_logger().get_logger('pso')`` is ``gatesplit.pso``) that
    shares the same handlers.
    """

    _instance: Optional['Logger'] = None
    _initialized: bool = False

    def __new__(cls) -> 'Logger':
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if Logger._initialized:
            return

        self._logger = logging.getLogger(ROOT_NAME)
        self._logger.setLevel(logging.DEBUG)
        self._logger.propagate = False
        self._logger.handlers = []

        self._console_handler = self._console(logging.INFO, use_colors=True)
        self._logger.addHandler(self._console_handler)
        self._file_handler: Optional[logging.FileHandler] = None

        Logger._initialized = True

    @staticmethod
    def _console(level: int, use_colors: bool) -> logging.StreamHandler:
        # sys.stderr is looked up now so that capture in tests sees the handler
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(level)
        handler.setFormatter(ColoredFormatter(use_colors=use_colors))
        return handler

    @staticmethod
    def _file(path: Path) -> logging.FileHandler:
        path.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.FileHandler(path, encoding='utf-8')
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt=FILE_DATE_FORMAT))
        return handler

    def configure(
        self,
        verbose: bool = False,
        quiet: bool = False,
        log_file: Optional[Union[str, Path]] = None,
        use_colors: bool = True,
    ) -> None:
        """
        Rebuild the console handler and, when ``log_file`` is given, replace the file handler.

        Args:
            verbose: DEBUG on the console
            quiet: WARNING and above on the console
            log_file: Plain-text log destination; parent directories are created
            use_colors: Color console records by level
        """
        self._logger.removeHandler(self._console_handler)
        self._console_handler = self._console(console_level(verbose, quiet), use_colors)
        self._logger.addHandler(self._console_handler)

        if log_file:
            if self._file_handler is not None:
                self._logger.removeHandler(self._file_handler)
                self._file_handler.close()
            self._file_handler = self._file(Path(log_file))
            self._logger.addHandler(self._file_handler)

    def get_logger(self, name: Optional[str] = None) -> logging.Logger:
        return logging.getLogger(f'{ROOT_NAME}.{name}') if name else self._logger

    def debug(self, msg: str, *args, **kwargs) -> None:
        self._logger.debug(msg, *args, **kwargs)

    def info(self, msg: str, *args, **kwargs) -> None:
        self._logger.info(msg, *args, **kwargs)

    def warning(self, msg: str, *args, **kwargs) -> None:
        self._logger.warning(msg, *args, **kwargs)

    def error(self, msg: str, *args, **kwargs) -> None:
        self._logger.error(msg, *args, **kwargs)

    def success(self, msg: str) -> None:
        self._logger.info(f"{Colors.success('✓')} {msg}")

    def fail(self, msg: str) -> None:
        self._logger.error(f"{Colors.error('✗')} {msg}")

    def section(self, title: str, char: str = '=') -> None:
        """Blank line, bold title, then a rule."""
        self._logger.info(f"\n{Colors.bold(title)}")
        self._logger.info(char * RULE_WIDTH)

    def metric(self, label: str, value) -> None:
        """One aligned ``label: value`` line of a console summary."""
        self._logger.info(f"{label + ':':<{LABEL_WIDTH}} {value}")


_logger: Optional[Logger] = None


def get_logger() -> Logger:
    global _logger
    if _logger is None:
        _logger = Logger()
    return _logger


def configure_logging(
    verbose: bool = False,
    quiet: bool = False,
    log_file: Optional[Union[str, Path]] = None,
    use_colors: bool = True,
) -> None:
    """Configure the global logger; see ``Logger.configure``."""
    get_logger().configure(verbose=verbose, quiet=quiet, log_file=log_file, use_colors=use_colors)


def reset_logger() -> None:
    """Close every handler and drop the singleton (tests reconfigure per case)."""
    global _logger
    root = logging.getLogger(ROOT_NAME)
    for handler in root.handlers[:]:
        handler.close()
        root.removeHandler(handler)
    _logger = None
    Logger._instance = None
    Logger._initialized = False
