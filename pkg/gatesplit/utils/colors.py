"""ANSI styling for stderr output."""

import logging
import os
import sys


class Colors:
    """Escape codes plus a process-wide switch (``--no-color``, NO_COLOR)."""

    CYAN = '\033[96m'
    GREEN = '\033[92m'
    YELLOW = '\033[93m'
    RED = '\033[91m'
    BOLD = '\033[1m'
    RESET = '\033[0m'

    enabled: bool = True

    @classmethod
    def disable(cls) -> None:
        cls.enabled = False

    @classmethod
    def enable(cls) -> None:
        cls.enabled = True

    @classmethod
    def stream_supports_color(cls, stream=None) -> bool:
        """True when ``stream`` (stderr by default) is a tty and NO_COLOR is unset."""
        if os.environ.get('NO_COLOR'):
            return False
        stream = stream or sys.stderr
        isatty = getattr(stream, 'isatty', None)
        return bool(isatty and isatty())

    @classmethod
    def for_level(cls, levelno: int) -> str:
        if levelno >= logging.CRITICAL:
            return cls.RED + cls.BOLD
        if levelno >= logging.ERROR:
            return cls.RED
        if levelno >= logging.WARNING:
            return cls.YELLOW
        if levelno >= logging.INFO:
            return cls.GREEN
        return cls.CYAN

    @classmethod
    def paint(cls, code: str, text: str) -> str:
        """Wrap ``text`` in ``code`` unless colors are switched off."""
        return f"{code}{text}{cls.RESET}" if cls.enabled else text

    @classmethod
    def success(cls, text: str) -> str:
        return cls.paint(cls.GREEN, text)

    @classmethod
    def error(cls, text: str) -> str:
        return cls.paint(cls.RED, text)

    @classmethod
    def warning(cls, text: str) -> str:
        return cls.paint(cls.YELLOW, text)

    @classmethod
    def bold(cls, text: str) -> str:
        return cls.paint(cls.BOLD, text)
