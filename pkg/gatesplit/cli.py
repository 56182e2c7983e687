"""Command-line interface for gatesplit."""

import argparse
import json
import math
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .__version__ import __version__
from .core.errors import DimensionMismatchError, GatesplitError, NumericalError
from .core.gate_io import gate_to_dict, resolve_gate
from .core.separation import ProductAnsatz, approx_separate, is_epsilon_separable
from .core.spectral import gate_fidelity_min
from .features.cnot_experiment import run_cnot_experiment
from .features.state_sampling import run_figure2_experiment
from .features.theorem_validation import run_theorem_validation
from .reports.console_reporter import ConsoleReporter
from .reports.csv_reporter import CSVReporter
from .reports.json_reporter import JSONReporter
from .utils.colors import Colors
from .utils.config import ConfigValidationError, PsoConfig
from .utils.logging import configure_logging, get_logger
from .utils.validators import parse_dims

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_NUMERICAL = 4

VERBS = ('fidelity', 'separate', 'experiment', 'theorem', 'convert')
EXPERIMENTS = ('cnot', 'figure2')
DEFAULT_SEED = 42


def _dims_arg(text: str) -> List[int]:
    try:
        return parse_dims(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _epsilon_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"epsilon must be a number, got {text!r}")
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"epsilon must lie in (0, 1), got {value}")
    return value


def _count_arg(minimum: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value
    return parse


def _seed_arg(text: str) -> int:
    value = _count_arg(0)(text)
    if value >= 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must be below 2**64, got {value}")
    return value


# (flag, argparse keyword arguments); the same tables drive parsing and to_argv
Option = Tuple[str, Dict[str, Any]]

GLOBAL_OPTIONS: List[Option] = [
    ('--verbose', dict(action='store_true', help='Debug output on stderr')),
    ('--quiet', dict(action='store_true', help='Warnings and errors only')),
    ('--log-file', dict(metavar='PATH', help='Also write logs to PATH')),
    ('--no-color', dict(action='store_true', help='Disable ANSI colors')),
]

_PSO_OPTIONS: List[Option] = [
    ('--restarts', dict(type=_count_arg(1), metavar='N', help='PSO restarts (default: 5)')),
    ('--iterations', dict(type=_count_arg(1), metavar='N', help='PSO iterations (default: 300)')),
    ('--swarm-size', dict(type=_count_arg(2), metavar='N', help='PSO swarm size (default: 40)')),
]

VERB_OPTIONS: Dict[str, List[Option]] = {
    'fidelity': [
        ('--a', dict(required=True, metavar='GATE', help='First gate (fixture name or JSON file)')),
        ('--b', dict(required=True, metavar='GATE', help='Second gate (fixture name or JSON file)')),
    ],
    'separate': [
        ('--target', dict(required=True, metavar='GATE', help='Target gate (fixture name or JSON file)')),
        ('--dims', dict(required=True, type=_dims_arg, metavar='M1,M2[,M3]', help='Local dimensions')),
        ('--epsilon', dict(type=_epsilon_arg, metavar='EPS', help='Report the eps-separability verdict')),
        ('--seed', dict(type=_seed_arg, default=DEFAULT_SEED, help=f'Run seed (default: {DEFAULT_SEED})')),
        ('--out', dict(metavar='DIR', help='Write result JSON and convergence CSV to DIR')),
    ] + _PSO_OPTIONS,
    'experiment': [
        ('name', dict(choices=EXPERIMENTS, help='Experiment to run')),
        ('--seed', dict(type=_seed_arg, default=DEFAULT_SEED, help=f'Run seed (default: {DEFAULT_SEED})')),
        ('--out', dict(metavar='DIR', help='Write CSV/SVG/JSON side files to DIR')),
        ('--samples', dict(type=_count_arg(0), default=1000, metavar='N',
                           help='States sampled by figure2 (default: 1000)')),
    ] + _PSO_OPTIONS,
    'theorem': [
        ('--trials', dict(required=True, type=_count_arg(1), metavar='N', help='Random unitary pairs')),
        ('--dim', dict(required=True, type=_count_arg(2), metavar='D', help='Matrix dimension')),
        ('--seed', dict(type=_seed_arg, default=DEFAULT_SEED, help=f'Run seed (default: {DEFAULT_SEED})')),
        ('--oracle-samples', dict(type=_count_arg(0), default=500, metavar='N',
                                  help='Haar states per oracle check (default: 500)')),
    ],
    'convert': [
        ('--gate', dict(required=True, metavar='GATE', help='Gate (fixture name or JSON file)')),
        ('--unitarize', dict(action='store_true', help='Project onto the nearest unitary first')),
    ],
}

VERB_HELP = {
    'fidelity': 'Gate fidelity F_min of two gates',
    'separate': 'Search local gates approximating a target',
    'experiment': 'Reproduce the CNOT separation or the state-sampling plot',
    'theorem': 'Validate the chord formula on random unitary pairs',
    'convert': 'Print a gate in gate JSON format',
}


def _dest(flag: str) -> str:
    return flag.lstrip('-').replace('-', '_')


@dataclass
class Command:
    """A parsed invocation: the verb and all of its options (globals included)."""
    verb: str
    options: Dict[str, Any] = field(default_factory=dict)

    def to_argv(self) -> List[str]:
        """Argument vector that parses back to this command."""
        argv: List[str] = []
        for flag, kwargs in GLOBAL_OPTIONS:
            argv.extend(_render(flag, kwargs, self.options.get(_dest(flag))))
        argv.append(self.verb)
        for flag, kwargs in VERB_OPTIONS[self.verb]:
            argv.extend(_render(flag, kwargs, self.options.get(_dest(flag))))
        return argv


def _render(flag: str, kwargs: Dict[str, Any], value: Any) -> List[str]:
    if value is None or value is False:
        return []
    if kwargs.get('action') == 'store_true':
        return [flag]
    if isinstance(value, (list, tuple)):
        value = ','.join(str(v) for v in value)
    elif isinstance(value, float):
        value = repr(value)
    if not flag.startswith('-'):
        return [str(value)]
    return [flag, str(value)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='gatesplit',
        description='Gate fidelity and approximate separation of quantum gates',
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    for flag, kwargs in GLOBAL_OPTIONS:
        parser.add_argument(flag, **kwargs)

    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    for verb in VERBS:
        sub = subparsers.add_parser(verb, help=VERB_HELP[verb])
        for flag, kwargs in VERB_OPTIONS[verb]:
            sub.add_argument(flag, **kwargs)
    return parser


def parse_args(argv: Sequence[str]) -> Command:
    """
    Parse an argument vector.

    Raises:
        SystemExit: usage error (code 2), or --help/--version (code 0)
    """
    namespace = vars(build_parser().parse_args(list(argv)))
    verb = namespace.pop('command')
    return Command(verb=verb, options=namespace)


def _pso_config(options: Dict[str, Any]) -> PsoConfig:
    cfg = PsoConfig(seed=options['seed'])
    overrides = {
        key: options[key]
        for key in ('restarts', 'iterations', 'swarm_size')
        if options.get(key) is not None
    }
    return replace(cfg, **overrides)


def _emit(document: Dict[str, Any]) -> None:
    try:
        text = JSONReporter.dumps(document)
    except ValueError as e:
        raise NumericalError(f"non-finite value in result: {e}") from e
    sys.stdout.write(text)
    sys.stdout.write('\n')
    sys.stdout.flush()


def cmd_fidelity(options: Dict[str, Any]) -> int:
    """Gate fidelity of --a against --b."""
    a = resolve_gate(options['a'])
    b = resolve_gate(options['b'])
    report = gate_fidelity_min(a, b)
    ConsoleReporter.print_fidelity(report, options['a'], options['b'])
    _emit(report.to_dict())
    return EXIT_OK


def cmd_separate(options: Dict[str, Any]) -> int:
    """Approximate separation of --target over --dims."""
    target = resolve_gate(options['target'])
    dims = options['dims']
    if math.prod(dims) != target.dim:
        raise DimensionMismatchError(
            f"--dims {','.join(map(str, dims))} multiplies to {math.prod(dims)}, "
            f"target has dimension {target.dim}"
        )
    target = target.with_partition(dims)
    result = approx_separate(target, ProductAnsatz(dims), _pso_config(options))

    document = result.to_dict()
    verdict = None
    if options.get('epsilon') is not None:
        verdict = is_epsilon_separable(result, options['epsilon'])
        document['epsilon'] = options['epsilon']
        document['separable'] = verdict
    ConsoleReporter.print_separation(result, verdict, options.get('epsilon'))

    if options.get('out'):
        out_dir = Path(options['out'])
        JSONReporter.generate(document, out_dir / 'separation.json')
        CSVReporter.write_convergence(result.pso.history, out_dir / 'convergence.csv')

    _emit(document)
    return EXIT_OK


def cmd_experiment(options: Dict[str, Any]) -> int:
    """Run one of the bundled experiments."""
    out_dir = Path(options['out']) if options.get('out') else None
    if options['name'] == 'cnot':
        result = run_cnot_experiment(_pso_config(options), out_dir=out_dir)
        ConsoleReporter.print_separation(result)
        _emit(result.to_dict())
    else:
        report = run_figure2_experiment(options['samples'], options['seed'], out_dir=out_dir)
        ConsoleReporter.print_sampling(report)
        _emit(report.to_dict())
    return EXIT_OK


def cmd_theorem(options: Dict[str, Any]) -> int:
    """Validation sweep of the chord formula."""
    show_progress = not options.get('quiet') and sys.stderr.isatty()
    report = run_theorem_validation(
        options['trials'],
        options['dim'],
        options['seed'],
        oracle_samples=options['oracle_samples'],
        show_progress=show_progress,
    )
    ConsoleReporter.print_theorem(report)
    _emit(report.to_dict())
    return EXIT_OK


def cmd_convert(options: Dict[str, Any]) -> int:
    """Print a gate in gate JSON format."""
    gate = resolve_gate(options['gate'], unitarize=options.get('unitarize', False))
    if gate.projection_distance:
        get_logger().info(f"Projection distance: {gate.projection_distance:.3e}")
    _emit(gate_to_dict(gate))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[Dict[str, Any]], int]] = {
    'fidelity': cmd_fidelity,
    'separate': cmd_separate,
    'experiment': cmd_experiment,
    'theorem': cmd_theorem,
    'convert': cmd_convert,
}


def run(cmd: Command) -> int:
    """
    Execute a parsed command.

    Prints one JSON document on stdout; logs go to stderr.

    Returns:
        0 success, 3 data or I/O error, 4 numerical failure (diagnostic JSON on stderr)
    """
    options = cmd.options
    use_colors = not options.get('no_color') and Colors.stream_supports_color(sys.stderr)
    if use_colors:
        Colors.enable()
    else:
        Colors.disable()
    logger = get_logger()

    try:
        configure_logging(
            verbose=bool(options.get('verbose')),
            quiet=bool(options.get('quiet')),
            log_file=Path(options['log_file']) if options.get('log_file') else None,
            use_colors=use_colors,
        )
        return COMMANDS[cmd.verb](options)
    except NumericalError as e:
        logger.fail(f"Numerical failure: {e}")
        sys.stderr.write(json.dumps(e.to_dict()) + '\n')
        return EXIT_NUMERICAL
    except ConfigValidationError as e:
        for error in e.errors:
            logger.fail(f"Configuration error: {error}")
        return EXIT_DATA
    except GatesplitError as e:
        logger.fail(str(e))
        return EXIT_DATA
    except OSError as e:
        # unwritable --out directory or --log-file
        logger.fail(f"I/O error: {e}")
        return EXIT_DATA


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point."""
    try:
        cmd = parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    return run(cmd)


if __name__ == '__main__':
    sys.exit(main())
