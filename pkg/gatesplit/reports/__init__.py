"""Report modules."""

from .json_reporter import JSONReporter
from .csv_reporter import CSVReporter
from .svg_reporter import SVGReporter
from .console_reporter import ConsoleReporter

__all__ = [
    'JSONReporter',
    'CSVReporter',
    'SVGReporter',
    'ConsoleReporter',
]
