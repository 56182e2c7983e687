"""Tests for configuration validation."""

import math

import pytest
from pathlib import Path
import tempfile
import yaml

from gatesplit.utils.config import (
    ConfigValidationError,
    ConfigValidationWarning,
    PsoConfig,
    threads_from_env,
)


class TestPsoConfigValidation:
    """Test cases for PsoConfig.validate()."""

    def test_valid_default_config(self):
        """Default config should pass validation."""
        errors, warnings = PsoConfig().validate()
        assert errors == []
        assert warnings == []

    def test_defaults(self):
        cfg = PsoConfig()
        assert cfg.swarm_size == 40
        assert cfg.iterations == 300
        assert cfg.restarts == 5
        assert cfg.inertia == 0.7298
        assert cfg.cognitive == 1.49618
        assert cfg.social == 1.49618
        assert cfg.velocity_clamp == math.pi
        assert cfg.seed == 42

    def test_swarm_too_small(self):
        errors, _ = PsoConfig(swarm_size=1).validate()
        assert len(errors) == 1
        assert "swarm_size" in errors[0]

    def test_small_swarm_warning(self):
        errors, warnings = PsoConfig(swarm_size=5).validate()
        assert errors == []
        assert any("swarm_size" in str(w) for w in warnings)
        assert all(isinstance(w, ConfigValidationWarning) for w in warnings)

    def test_single_restart_warning(self):
        errors, warnings = PsoConfig(restarts=1).validate()
        assert errors == []
        assert any("restarts" in str(w) for w in warnings)

    @pytest.mark.parametrize('field,value', [
        ('iterations', 0),
        ('restarts', 0),
        ('inertia', 1.0),
        ('inertia', 0.0),
        ('cognitive', -1.0),
        ('social', float('nan')),
        ('velocity_clamp', 0.0),
        ('seed', -1),
        ('seed', 2 ** 64),
    ])
    def test_invalid_field(self, field, value):
        errors, _ = PsoConfig(**{field: value}).validate()
        assert any(field in e for e in errors)

    def test_multiple_errors(self):
        errors, _ = PsoConfig(iterations=0, restarts=0).validate()
        assert len(errors) == 2

    def test_raise_on_error(self):
        with pytest.raises(ConfigValidationError) as exc_info:
            PsoConfig(iterations=0).validate(raise_on_error=True)
        assert len(exc_info.value.errors) == 1
        assert "iterations" in str(exc_info.value)


class TestPeriodicMask:
    """Test cases for PsoConfig.periodic_mask()."""

    def test_empty_means_none_periodic(self):
        assert PsoConfig().periodic_mask(3) == [False, False, False]

    def test_explicit_flags(self):
        assert PsoConfig(periodic=[True, False]).periodic_mask(2) == [True, False]

    def test_wrong_length(self):
        with pytest.raises(ConfigValidationError):
            PsoConfig(periodic=[True]).periodic_mask(4)


class TestPsoConfigLoading:
    """Test cases for loading and saving configs."""

    def test_from_dict(self):
        cfg = PsoConfig.from_dict({'swarm_size': 20, 'iterations': 100.0, 'inertia': '0.5'})
        assert cfg.swarm_size == 20
        assert cfg.iterations == 100
        assert cfg.inertia == 0.5

    def test_unknown_field(self):
        with pytest.raises(ConfigValidationError) as exc_info:
            PsoConfig.from_dict({'swarm': 20})
        assert "swarm" in exc_info.value.errors[0]

    def test_non_integer_count(self):
        with pytest.raises(ConfigValidationError):
            PsoConfig.from_dict({'restarts': 2.5})

    def test_bool_is_not_a_count(self):
        with pytest.raises(ConfigValidationError):
            PsoConfig.from_dict({'restarts': True})

    def test_not_a_mapping(self):
        with pytest.raises(ConfigValidationError):
            PsoConfig.from_dict([1, 2, 3])

    def test_from_json(self):
        cfg = PsoConfig.from_json('{"seed": 7, "periodic": [1, 0]}')
        assert cfg.seed == 7
        assert cfg.periodic == [True, False]

    def test_from_json_parse_error(self):
        with pytest.raises(ConfigValidationError):
            PsoConfig.from_json('{seed: }')

    def test_save_and_load(self):
        """Saved YAML should load back to an equal config."""
        cfg = PsoConfig(swarm_size=12, restarts=3, seed=99, periodic=[True, True])
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / 'pso.yml'
            cfg.save(path)
            assert yaml.safe_load(path.read_text())['seed'] == 99
            assert PsoConfig.from_file(path) == cfg

    def test_json_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / 'pso.json'
            path.write_text(PsoConfig(iterations=50).to_json(), encoding='utf-8')
            assert PsoConfig.from_file(path).iterations == 50

    def test_empty_file_gives_defaults(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / 'empty.yml'
            path.write_text('', encoding='utf-8')
            assert PsoConfig.from_file(path) == PsoConfig()

    def test_invalid_yaml(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / 'bad.yml'
            path.write_text('swarm_size: [1, 2', encoding='utf-8')
            with pytest.raises(ConfigValidationError):
                PsoConfig.from_file(path)

    def test_missing_file(self):
        with pytest.raises(ConfigValidationError):
            PsoConfig.from_file(Path('/nonexistent/pso.yml'))


class TestThreadsFromEnv:
    """Test cases for threads_from_env()."""

    @pytest.mark.parametrize('raw,expected', [
        (None, 1),
        ('', 1),
        ('0', 1),
        ('1', 1),
        ('4', 4),
        (' 3 ', 3),
    ])
    def test_values(self, raw, expected):
        environ = {} if raw is None else {'GATESPLIT_THREADS': raw}
        assert threads_from_env(environ) == expected

    @pytest.mark.parametrize('raw', ['abc', '-2', '1.5'])
    def test_invalid(self, raw):
        with pytest.raises(ConfigValidationError):
            threads_from_env({'GATESPLIT_THREADS': raw})

    def test_reads_process_environment(self, monkeypatch):
        monkeypatch.setenv('GATESPLIT_THREADS', '2')
        assert threads_from_env() == 2


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
