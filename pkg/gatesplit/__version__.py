"""Version information for gatesplit."""

__version__ = "0.4.0"
__author__ = "gatesplit contributors"
__description__ = "Gate fidelity and approximate separation of quantum gates"

# Changelog:
# 0.4.0 - Experiments & CLI
#        - New `experiment cnot|figure2` and `theorem` commands
#        - CSV (sampling, convergence) and SVG scatter reports
#        - Worst-case input state for a gate pair (worst_case_state)
#        - GATESPLIT_THREADS caps inner parallelism; output identical for any value
#        - Exit codes: 2 usage, 3 data, 4 numerical (diagnostic JSON on stderr)
#
# 0.3.0 - Approximate Separation
#        - ProductAnsatz: ZYZ chart for qubits, Hermitian exponential chart otherwise
#        - approx_separate seeds every restart with the identity product
#        - is_epsilon_separable verdict
#
# 0.2.0 - Particle Swarm Optimizer
#        - Restarted global-best PSO with periodic (angle) dimensions
#        - Per-particle Philox substreams; thread count does not change results
#        - NaN objective values treated as +inf and counted
#
# 0.1.0 - Initial release
#        - Exact gate fidelity from the spectrum of V^dagger U
#        - Gate JSON format and built-in fixtures (cnot, swap, cz, iswap, toffoli)
#        - nearest_unitary projection for printed matrices
