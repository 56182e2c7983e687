"""Configuration management: PSO hyperparameters and runtime settings."""

import json
import math
import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

THREADS_ENV = 'GATESPLIT_THREADS'


class ConfigValidationError(Exception):
    """Raised when configuration validation fails."""

    def __init__(self, errors: List[str]):
        self.errors = errors
        super().__init__(f"Configuration validation failed: {'; '.join(errors)}")


class ConfigValidationWarning:
    """Represents a configuration warning (non-fatal)."""

    def __init__(self, message: str):
        self.message = message

    def __str__(self):
        return self.message


@dataclass
class PsoConfig:
    """
    Particle swarm hyperparameters.

    Defaults are the constriction coefficients (0.7298 / 1.49618), which
    converge well without extra tuning. ``periodic`` flags dimensions that
    wrap modulo 2*pi; an empty list leaves the choice to the caller.
    """
    swarm_size: int = 40
    iterations: int = 300
    restarts: int = 5
    inertia: float = 0.7298
    cognitive: float = 1.49618
    social: float = 1.49618
    velocity_clamp: float = math.pi
    periodic: List[bool] = field(default_factory=list)
    seed: int = 42

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PsoConfig':
        """
        Build a config from a mapping with the dataclass field names.

        Raises:
            ConfigValidationError: unknown keys or wrong value types
        """
        if not isinstance(data, dict):
            raise ConfigValidationError([f"PSO config must be a mapping, got {type(data).__name__}"])

        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigValidationError([f"Unknown PSO config field(s): {', '.join(unknown)}"])

        try:
            values = dict(data)
            for name in ('swarm_size', 'iterations', 'restarts', 'seed'):
                if name in values:
                    values[name] = _as_int(name, values[name])
            for name in ('inertia', 'cognitive', 'social', 'velocity_clamp'):
                if name in values:
                    values[name] = float(values[name])
            if 'periodic' in values:
                values['periodic'] = [bool(flag) for flag in values['periodic']]
        except (TypeError, ValueError) as e:
            raise ConfigValidationError([f"Invalid PSO config value: {e}"])

        return cls(**values)

    @classmethod
    def from_json(cls, text: str) -> 'PsoConfig':
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise ConfigValidationError([f"JSON parse error: {e}"])

    @classmethod
    def from_file(cls, config_path: Path) -> 'PsoConfig':
        """
        Load a PSO config from a YAML or JSON file.

        Args:
            config_path: Path to the file (JSON is read as YAML)

        Returns:
            PsoConfig

        Raises:
            ConfigValidationError: parse or read error
        """
        try:
            with open(config_path, 'r', encoding='utf-8-sig') as f:
                data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigValidationError([f"YAML parse error: {e}"])
        except (IOError, OSError) as e:
            raise ConfigValidationError([f"Cannot read config file: {e}"])
        except UnicodeDecodeError as e:
            raise ConfigValidationError([f"Config file is not UTF-8: {e}"])

        return cls.from_dict(data)

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to a JSON-ready dictionary."""
        return asdict(self)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def save(self, config_path: Path) -> None:
        """Save configuration as YAML."""
        with open(config_path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(self.to_dict(), f, default_flow_style=False, sort_keys=False)

    def validate(self, raise_on_error: bool = False) -> Tuple[List[str], List[ConfigValidationWarning]]:
        """
        Validate configuration and return errors and warnings.

        Args:
            raise_on_error: If True, raise ConfigValidationError on validation errors

        Returns:
            Tuple of (errors, warnings) lists
        """
        errors = []
        warnings = []

        if self.swarm_size < 2:
            errors.append(f"swarm_size must be >= 2, got {self.swarm_size}")
        elif self.swarm_size < 10:
            warnings.append(ConfigValidationWarning(
                f"swarm_size {self.swarm_size} is small; convergence may be poor"
            ))

        if self.iterations < 1:
            errors.append(f"iterations must be >= 1, got {self.iterations}")

        if self.restarts < 1:
            errors.append(f"restarts must be >= 1, got {self.restarts}")
        elif self.restarts == 1:
            warnings.append(ConfigValidationWarning(
                "restarts = 1: no protection against a swarm stuck in a local basin"
            ))

        if not 0.0 < self.inertia < 1.0:
            errors.append(f"inertia must lie in (0, 1), got {self.inertia}")

        for name in ('cognitive', 'social', 'velocity_clamp'):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                errors.append(f"{name} must be a positive number, got {value}")

        if not 0 <= self.seed < 2 ** 64:
            errors.append(f"seed must lie in [0, 2**64), got {self.seed}")

        if raise_on_error and errors:
            raise ConfigValidationError(errors)

        return errors, warnings

    def periodic_mask(self, dim: int) -> List[bool]:
        """
        Per-dimension periodic flags for a problem of size ``dim``.

        Raises:
            ConfigValidationError: ``periodic`` is set but has the wrong length
        """
        if not self.periodic:
            return [False] * dim
        if len(self.periodic) != dim:
            raise ConfigValidationError([
                f"periodic has {len(self.periodic)} entries but the problem has {dim} dimensions"
            ])
        return list(self.periodic)


def _as_int(name: str, value: Any) -> int:
    if isinstance(value, bool):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f"{name} must be an integer, got {value!r}")
    return int(value)


def threads_from_env(environ: Optional[Dict[str, str]] = None) -> int:
    """
    Worker thread count from GATESPLIT_THREADS.

    Unset, empty or 0 means serial evaluation (returns 1).

    Raises:
        ConfigValidationError: negative or non-integer value
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(THREADS_ENV, '').strip()
    if not raw:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigValidationError([f"{THREADS_ENV} must be an integer, got {raw!r}"])
    if threads < 0:
        raise ConfigValidationError([f"{THREADS_ENV} must be >= 0, got {threads}"])
    return max(threads, 1)
