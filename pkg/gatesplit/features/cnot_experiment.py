"""Approximate separation of CNOT into two qubit gates."""

from pathlib import Path
from typing import Optional

from ..core.gate_io import load_fixture
from ..core.separation import ProductAnsatz, SeparationResult, approx_separate
from ..reports.csv_reporter import CSVReporter
from ..reports.json_reporter import JSONReporter
from ..utils.config import PsoConfig
from ..utils.logging import get_logger

RESULT_FILE = 'cnot_separation.json'
CONVERGENCE_FILE = 'cnot_convergence.csv'


def run_cnot_experiment(
    cfg: Optional[PsoConfig] = None,
    out_dir: Optional[Path] = None,
    threads: Optional[int] = None,
) -> SeparationResult:
    """
    Search U, V minimizing d_max((U (x) V)^dagger CNOT) with the ZYZ chart.

    Args:
        cfg: PSO hyperparameters (defaults when None)
        out_dir: when given, write the result JSON and the convergence CSV
            (iteration, best d_max of the winning restart) there
        threads: evaluation threads (default: GATESPLIT_THREADS)
    """
    cfg = cfg or PsoConfig()
    target = load_fixture('cnot')
    ansatz = ProductAnsatz((2, 2))

    get_logger().info(
        f"CNOT separation: swarm {cfg.swarm_size}, {cfg.iterations} iterations, "
        f"{cfg.restarts} restart(s), seed {cfg.seed}"
    )
    result = approx_separate(target, ansatz, cfg, threads=threads)

    if out_dir is not None:
        out_dir = Path(out_dir)
        JSONReporter.generate(result.to_dict(), out_dir / RESULT_FILE)
        CSVReporter.write_convergence(result.pso.history, out_dir / CONVERGENCE_FILE)

    return result
