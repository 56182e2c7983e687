"""JSON result documents (stdout and ``--out`` side files)."""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np

from ..utils.logging import get_logger

DEFAULT_FILE = 'gatesplit_result.json'


def _encode(value: Any) -> Any:
    # numpy leaks into result dicts through scalars pulled out of arrays
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': float(value.real), 'im': float(value.imag)}
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


class JSONReporter:
    """
    Serialize result documents.

    Documents carry no timestamps or host details, so the same run always
    produces the same bytes. Non-finite floats are rejected rather than
    written as ``NaN``.
    """

    @staticmethod
    def dumps(document: Dict[str, Any], pretty: bool = True) -> str:
        return json.dumps(document, indent=2 if pretty else None, ensure_ascii=False,
                          allow_nan=False, default=_encode)

    @staticmethod
    def generate(
        document: Dict[str, Any],
        output_path: Optional[Union[str, Path]] = None,
        pretty: bool = True,
    ) -> Path:
        """
        Write ``document`` to ``output_path`` (default ``./gatesplit_result.json``).

        Parent directories are created. The file ends with a newline.
        """
        path = Path(output_path) if output_path is not None else Path.cwd() / DEFAULT_FILE
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(JSONReporter.dumps(document, pretty=pretty) + '\n', encoding='utf-8')

        get_logger().success(f"JSON report: {path}")
        return path

    @staticmethod
    def load(report_path: Union[str, Path]) -> dict:
        return json.loads(Path(report_path).read_text(encoding='utf-8'))
