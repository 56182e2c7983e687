"""Console summaries (human-readable, on stderr through the logger)."""

from ..core.separation import SeparationResult
from ..core.spectral import FidelityReport
from ..utils.colors import Colors
from ..utils.logging import get_logger


class ConsoleReporter:
    """Log short summaries of results; stdout stays reserved for JSON."""

    @staticmethod
    def print_fidelity(report: FidelityReport, a_name: str = 'A', b_name: str = 'B'):
        logger = get_logger()
        logger.section(f"GATE FIDELITY  {a_name} vs {b_name}")
        logger.metric("F_min", f"{report.f_min:.10f}")
        logger.metric("d_max", f"{report.d_max:.10f}")
        logger.metric("epsilon achieved", f"{report.epsilon_achieved:.10f}")
        if not report.formula_valid:
            logger.warning(
                f"{Colors.warning('!')} eigenvalues do not fit a half circle; "
                f"the chord formula does not apply (F_min = 0)"
            )

    @staticmethod
    def print_separation(result: SeparationResult, verdict=None, epsilon=None):
        """
        Log a separation summary.

        Args:
            result: Separation result
            verdict: is_epsilon_separable outcome, when an epsilon was given
            epsilon: the epsilon the verdict refers to
        """
        logger = get_logger()
        pso = result.pso
        logger.section(f"APPROXIMATE SEPARATION  {result.target_name or 'target'}")
        logger.metric("Partition", list(result.product.partition))
        logger.metric("d_max", f"{result.d_max:.10f}")
        logger.metric("F_min", f"{result.f_min:.10f}")
        logger.metric("epsilon achieved", f"{result.epsilon_achieved:.10f}")
        logger.metric(
            "PSO",
            f"restart {pso.restart_index} of {len(pso.restart_best_values)}, "
            f"{pso.evaluations:,} evaluations",
        )
        if verdict is None:
            return
        if verdict:
            logger.success(f"{epsilon}-approximately separable")
        else:
            logger.fail(f"not shown {epsilon}-approximately separable")

    @staticmethod
    def print_sampling(report):
        logger = get_logger()
        logger.section("STATE SAMPLING")
        logger.metric("Samples", report.n)
        logger.metric("Gate bound F_min", f"{report.bound:.10f}")
        if report.n:
            logger.metric(
                "min / mean / max",
                f"{report.min_fidelity:.6f} / {report.mean_fidelity:.6f} / {report.max_fidelity:.6f}",
            )

    @staticmethod
    def print_theorem(report):
        logger = get_logger()
        logger.section("CHORD FORMULA VALIDATION")
        logger.metric("Trials", f"{report.trials} (dim {report.dim})")
        logger.metric("Semicircle cases", report.semicircle_cases)
        logger.metric("Max formula error", f"{report.max_abs_error:.3e}")
        logger.metric("Max oracle gap", f"{report.max_oracle_gap:.3e}")
        if report.invalid_cases:
            logger.metric(
                "Origin inside hull",
                f"{report.invalid_cases} case(s), formula overestimates by up to "
                f"{report.max_invalid_overestimate:.6f}",
            )
