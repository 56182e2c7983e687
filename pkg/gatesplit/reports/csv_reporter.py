"""CSV reports: per-sample fidelities and PSO convergence traces."""

import csv
from pathlib import Path
from typing import List, Sequence, Tuple

from ..utils.logging import get_logger

SAMPLING_HEADER = ('index', 'fidelity')
CONVERGENCE_HEADER = ('iteration', 'best_dmax')

# sampled fidelities are written with 12 significant digits
SAMPLING_FORMAT = '.12g'


def round_fidelity(value: float) -> float:
    """The value a sampling CSV stores for ``value``."""
    return float(format(value, SAMPLING_FORMAT))


class CSVReporter:
    """Write and read the CSV side files of the experiments."""

    @staticmethod
    def _write(output_path: Path, header: Sequence[str], rows) -> Path:
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(header)
            writer.writerows(rows)
        get_logger().success(f"CSV report: {output_path}")
        return output_path

    @staticmethod
    def _read(input_path: Path, header: Sequence[str]) -> List[List[str]]:
        with open(input_path, 'r', encoding='utf-8', newline='') as f:
            reader = csv.reader(f)
            found = next(reader, None)
            if found is None or tuple(found) != tuple(header):
                raise ValueError(f"{input_path}: expected header {','.join(header)}, got {found}")
            return [row for row in reader if row]

    @staticmethod
    def write_sampling(fidelities: Sequence[float], output_path: Path) -> Path:
        """``index,fidelity`` rows, fidelities to 12 significant digits."""
        rows = ((i, format(value, SAMPLING_FORMAT)) for i, value in enumerate(fidelities))
        return CSVReporter._write(output_path, SAMPLING_HEADER, rows)

    @staticmethod
    def read_sampling(input_path: Path) -> List[float]:
        rows = CSVReporter._read(input_path, SAMPLING_HEADER)
        values = []
        for expected, (index, value) in enumerate(rows):
            if int(index) != expected:
                raise ValueError(f"{input_path}: row {expected} has index {index}")
            values.append(float(value))
        return values

    @staticmethod
    def write_convergence(history: Sequence[float], output_path: Path) -> Path:
        """``iteration,best_dmax`` rows; values use repr so they read back exactly."""
        rows = ((i, repr(float(value))) for i, value in enumerate(history))
        return CSVReporter._write(output_path, CONVERGENCE_HEADER, rows)

    @staticmethod
    def read_convergence(input_path: Path) -> List[Tuple[int, float]]:
        return [(int(i), float(v)) for i, v in CSVReporter._read(input_path, CONVERGENCE_HEADER)]
