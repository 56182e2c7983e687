"""
Gate I/O: the gate JSON format and the built-in fixture table.

Gate JSON:
    {"dims": [m_1, ..., m_n],
     "matrix": [[{"re": float, "im": float}, ...], ...]}   (row-major)
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import yaml

from ..utils.validators import is_fixture_name
from .errors import DomainError, GateFormatError, NotUnitaryError, SingularMatrixError
from .linalg import DEFAULT_TOLERANCE, UnitaryGate, nearest_unitary

FIXTURES_PATH = Path(__file__).resolve().parent.parent / 'fixtures' / 'gates.yml'

# printed four-decimal matrices must sit this close to a unitary
FIXTURE_PROJECTION_LIMIT = 1e-3


def gate_to_dict(gate: UnitaryGate) -> Dict[str, Any]:
    """Serialize a gate to the gate JSON structure."""
    return {
        'dims': list(gate.partition),
        'matrix': [
            [{'re': float(z.real), 'im': float(z.imag)} for z in row]
            for row in gate.matrix
        ],
    }


def _entry(value: Any, where: str) -> complex:
    if isinstance(value, dict):
        if set(value) != {'re', 'im'}:
            raise GateFormatError(f"{where}: entry must have exactly 're' and 'im', got {sorted(value)}")
        parts = (value['re'], value['im'])
    elif isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise GateFormatError(f"{where}: complex pair must have 2 items")
        parts = tuple(value)
    else:
        parts = (value, 0.0)

    for part in parts:
        if isinstance(part, bool) or not isinstance(part, (int, float)):
            raise GateFormatError(f"{where}: non-numeric component {part!r}")
    return complex(float(parts[0]), float(parts[1]))


def _matrix_from_rows(rows: Any, label: str) -> np.ndarray:
    if not isinstance(rows, list) or not rows:
        raise GateFormatError(f"{label}: 'matrix' must be a non-empty array of rows")
    dim = len(rows)
    out = np.empty((dim, dim), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise GateFormatError(f"{label}: row {i} must have {dim} entries")
        for j, value in enumerate(row):
            out[i, j] = _entry(value, f"{label}[{i}][{j}]")
    if not np.all(np.isfinite(out)):
        raise GateFormatError(f"{label}: matrix has non-finite entries")
    return out


def gate_from_dict(
    data: Any,
    name: str = '',
    unitarize: bool = False,
    tol: float = DEFAULT_TOLERANCE,
) -> UnitaryGate:
    """
    Parse the gate JSON structure.

    Args:
        data: decoded JSON object
        name: label for the gate and for error messages
        unitarize: project onto the nearest unitary instead of rejecting a
            non-unitary matrix
        tol: unitarity tolerance when not unitarizing

    Raises:
        GateFormatError: malformed structure, bad dims, or a non-unitary matrix
    """
    label = name or 'gate'
    if not isinstance(data, dict):
        raise GateFormatError(f"{label}: expected a JSON object")
    missing = {'dims', 'matrix'} - set(data)
    if missing:
        raise GateFormatError(f"{label}: missing field(s) {', '.join(sorted(missing))}")

    dims = data['dims']
    if not isinstance(dims, list) or not all(isinstance(m, int) and not isinstance(m, bool) for m in dims):
        raise GateFormatError(f"{label}: 'dims' must be an array of integers")

    matrix = _matrix_from_rows(data['matrix'], label)
    try:
        if unitarize:
            return nearest_unitary(matrix, dims, name=name)
        return UnitaryGate.from_matrix(matrix, dims, tol=tol, name=name)
    except (NotUnitaryError, SingularMatrixError, DomainError) as e:
        raise GateFormatError(f"{label}: {e}")


def load_gate_file(path: Path, unitarize: bool = False) -> UnitaryGate:
    """Read a gate JSON file."""
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8-sig') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise GateFormatError(f"{path}: JSON parse error: {e}")
    except (IOError, OSError) as e:
        raise GateFormatError(f"{path}: cannot read gate file: {e}")
    return gate_from_dict(data, name=path.stem, unitarize=unitarize)


def save_gate_file(gate: UnitaryGate, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(gate_to_dict(gate), f, indent=2)
    return path


@lru_cache(maxsize=1)
def _fixture_table() -> Dict[str, Dict[str, Any]]:
    with open(FIXTURES_PATH, 'r', encoding='utf-8') as f:
        return yaml.safe_load(f)


def fixture_names() -> List[str]:
    return sorted(_fixture_table())


@lru_cache(maxsize=None)
def load_fixture(name: str) -> UnitaryGate:
    """
    Load a built-in gate.

    Printed fixtures (``unitarize: true``) are projected onto the nearest
    unitary; the projection may move them by at most 1e-3 in Frobenius norm.

    Raises:
        GateFormatError: unknown fixture name
    """
    table = _fixture_table()
    if name not in table:
        raise GateFormatError(f"Unknown fixture '{name}'. Available: {', '.join(fixture_names())}")

    entry = table[name]
    matrix = _matrix_from_rows(entry['matrix'], name)
    if entry.get('unitarize', False):
        gate = nearest_unitary(matrix, entry['dims'], name=name)
        if gate.projection_distance > FIXTURE_PROJECTION_LIMIT:
            raise GateFormatError(
                f"{name}: projection moved the printed matrix by {gate.projection_distance:.3e}"
            )
        return gate
    return UnitaryGate.from_matrix(matrix, entry['dims'], name=name)


def fixture_raw_matrix(name: str) -> np.ndarray:
    """Fixture matrix exactly as stored, before any projection."""
    table = _fixture_table()
    if name not in table:
        raise GateFormatError(f"Unknown fixture '{name}'")
    return _matrix_from_rows(table[name]['matrix'], name)


def resolve_gate(ref: str, unitarize: bool = False) -> UnitaryGate:
    """
    Resolve a CLI gate reference: a fixture name or a path to a gate JSON file.

    Raises:
        GateFormatError: unknown fixture, unreadable or malformed file
    """
    if is_fixture_name(ref) and ref in _fixture_table():
        return load_fixture(ref)
    path = Path(ref)
    if not path.exists():
        raise GateFormatError(
            f"'{ref}' is neither a fixture ({', '.join(fixture_names())}) nor an existing file"
        )
    return load_gate_file(path, unitarize=unitarize)


def gate_to_json(gate: UnitaryGate, indent: Optional[int] = 2) -> str:
    return json.dumps(gate_to_dict(gate), indent=indent)
