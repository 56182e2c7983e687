"""Experiment modules."""

from .cnot_experiment import run_cnot_experiment
from .state_sampling import SamplingReport, run_state_sampling, run_figure2_experiment
from .theorem_validation import (
    TheoremReport,
    TrialOutcome,
    check_pair,
    cube_roots_pair,
    run_theorem_validation,
)

__all__ = [
    'run_cnot_experiment',
    'SamplingReport',
    'run_state_sampling',
    'run_figure2_experiment',
    'TheoremReport',
    'TrialOutcome',
    'check_pair',
    'cube_roots_pair',
    'run_theorem_validation',
]
