"""Tests for report generators."""

import json
import numpy as np
import pytest
import tempfile
from pathlib import Path

from gatesplit.core.gate_io import load_fixture
from gatesplit.core.linalg import tensor_gates
from gatesplit.core.separation import ProductAnsatz, approx_separate
from gatesplit.core.spectral import gate_fidelity_min
from gatesplit.features.state_sampling import SamplingReport
from gatesplit.features.theorem_validation import TheoremReport
from gatesplit.reports import ConsoleReporter, CSVReporter, JSONReporter, SVGReporter
from gatesplit.reports.csv_reporter import round_fidelity
from gatesplit.utils.colors import Colors
from gatesplit.utils.config import PsoConfig
from gatesplit.utils.logging import configure_logging, reset_logger


@pytest.fixture
def plain_logger(capfd):
    """Uncolored logger whose console handler is bound after capture starts."""
    reset_logger()
    Colors.disable()
    configure_logging(use_colors=False)
    yield
    Colors.enable()
    reset_logger()


@pytest.fixture(scope='module')
def small_separation():
    cfg = PsoConfig(swarm_size=6, iterations=5, restarts=2)
    return approx_separate(load_fixture('cnot'), ProductAnsatz((2, 2)), cfg)


class TestConsoleReporter:
    """Test cases for ConsoleReporter (all output on stderr)."""

    def test_print_fidelity(self, plain_logger, capfd):
        report = gate_fidelity_min(load_fixture('cnot'), load_fixture('identity4'))
        ConsoleReporter.print_fidelity(report, 'cnot', 'identity4')
        captured = capfd.readouterr()
        assert captured.out == ''
        assert 'cnot vs identity4' in captured.err
        assert 'F_min:' in captured.err

    def test_print_fidelity_outside_half_circle(self, plain_logger, capfd):
        from gatesplit.features.theorem_validation import cube_roots_pair
        report = gate_fidelity_min(*cube_roots_pair())
        ConsoleReporter.print_fidelity(report)
        assert 'half circle' in capfd.readouterr().err

    def test_print_separation(self, plain_logger, capfd, small_separation):
        ConsoleReporter.print_separation(small_separation)
        captured = capfd.readouterr()
        assert 'APPROXIMATE SEPARATION' in captured.err
        assert 'cnot' in captured.err
        assert 'separable' not in captured.err

    def test_print_separation_verdict(self, plain_logger, capfd, small_separation):
        ConsoleReporter.print_separation(small_separation, verdict=True, epsilon=0.3)
        assert '0.3-approximately separable' in capfd.readouterr().err
        ConsoleReporter.print_separation(small_separation, verdict=False, epsilon=0.1)
        assert 'not shown 0.1' in capfd.readouterr().err

    def test_print_sampling(self, plain_logger, capfd):
        report = SamplingReport(n=2, fidelities=[0.8, 0.9], min_fidelity=0.8,
                                max_fidelity=0.9, mean_fidelity=0.85, bound=0.7)
        ConsoleReporter.print_sampling(report)
        assert '0.800000 / 0.850000 / 0.900000' in capfd.readouterr().err

    def test_print_sampling_empty(self, plain_logger, capfd):
        ConsoleReporter.print_sampling(SamplingReport(n=0))
        err = capfd.readouterr().err
        assert 'Samples:' in err
        assert 'min / mean / max' not in err

    def test_print_theorem(self, plain_logger, capfd):
        report = TheoremReport(trials=3, semicircle_cases=2, invalid_cases=1,
                               max_invalid_overestimate=0.5, dim=3)
        ConsoleReporter.print_theorem(report)
        err = capfd.readouterr().err
        assert '3 (dim 3)' in err
        assert '0.500000' in err


class TestJSONReporter:
    """Test cases for JSONReporter."""

    def test_dumps_pretty(self):
        text = JSONReporter.dumps({'f_min': 1.0, 'd_max': 0.0})
        assert text == '{\n  "f_min": 1.0,\n  "d_max": 0.0\n}'

    def test_dumps_compact(self):
        assert JSONReporter.dumps({'a': [1, 2]}, pretty=False) == '{"a": [1, 2]}'

    def test_dumps_numpy_values(self):
        document = {'n': np.int64(3), 'f': np.float64(0.5), 'ok': np.bool_(True),
                    'z': np.complex128(1 - 2j), 'v': np.array([1.0, 2.0])}
        assert json.loads(JSONReporter.dumps(document)) == {
            'n': 3, 'f': 0.5, 'ok': True, 'z': {'re': 1.0, 'im': -2.0}, 'v': [1.0, 2.0],
        }

    def test_dumps_rejects_nan(self):
        with pytest.raises(ValueError):
            JSONReporter.dumps({'d_max': float('nan')})

    def test_dumps_rejects_unknown_type(self):
        with pytest.raises(TypeError):
            JSONReporter.dumps({'x': object()})

    def test_generate_creates_file(self, small_separation):
        with tempfile.TemporaryDirectory() as tmpdir:
            output_path = Path(tmpdir) / 'nested' / 'result.json'
            result_path = JSONReporter.generate(small_separation.to_dict(), output_path)

            assert result_path == output_path
            data = JSONReporter.load(result_path)
            assert data['d_max'] == small_separation.d_max
            assert data['pso']['history'] == small_separation.pso.history
            assert data['product']['dims'] == [2, 2]

    def test_generate_default_path(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        path = JSONReporter.generate({'x': 1})
        assert path == tmp_path / 'gatesplit_result.json'
        assert json.loads(path.read_text(encoding='utf-8')) == {'x': 1}

    def test_no_timestamps(self, small_separation):
        """Same document, same bytes."""
        first = JSONReporter.dumps(small_separation.to_dict())
        second = JSONReporter.dumps(small_separation.to_dict())
        assert first == second
        assert 'timestamp' not in first


class TestCSVReporter:
    """Test cases for CSVReporter."""

    def test_sampling_round_trip(self, tmp_path):
        values = [0.123456789012345, 1.0, 0.70634]
        path = CSVReporter.write_sampling(values, tmp_path / 'samples.csv')
        assert path.read_text(encoding='utf-8').splitlines()[0] == 'index,fidelity'
        assert CSVReporter.read_sampling(path) == [round_fidelity(v) for v in values]

    def test_sampling_twelve_digits(self, tmp_path):
        path = CSVReporter.write_sampling([0.123456789012345], tmp_path / 'samples.csv')
        assert path.read_text(encoding='utf-8').splitlines()[1] == '0,0.123456789012'

    def test_convergence_exact(self, tmp_path):
        history = [2.0, 1.5000000000000002, 1.4142135623730951]
        path = CSVReporter.write_convergence(history, tmp_path / 'conv.csv')
        rows = CSVReporter.read_convergence(path)
        assert rows == list(enumerate(history))

    def test_bad_header(self, tmp_path):
        path = tmp_path / 'bad.csv'
        path.write_text('i,value\n0,1.0\n', encoding='utf-8')
        with pytest.raises(ValueError):
            CSVReporter.read_sampling(path)

    def test_bad_index(self, tmp_path):
        path = tmp_path / 'bad.csv'
        path.write_text('index,fidelity\n1,0.5\n', encoding='utf-8')
        with pytest.raises(ValueError):
            CSVReporter.read_sampling(path)

    def test_empty_sampling(self, tmp_path):
        path = CSVReporter.write_sampling([], tmp_path / 'empty.csv')
        assert CSVReporter.read_sampling(path) == []


class TestSVGReporter:
    """Test cases for SVGReporter."""

    def test_render_structure(self):
        svg = SVGReporter.render([0.8, 0.9, 1.0], 0.7063, title='CNOT <sampling>')
        assert svg.startswith('<?xml')
        assert 'width="800" height="600"' in svg
        assert svg.count('<circle') == 3
        assert 'id="bound"' in svg
        assert 'stroke-dasharray' in svg
        assert 'CNOT &lt;sampling&gt;' in svg
        assert 'F_min = 0.7063' in svg

    def test_no_external_references(self):
        svg = SVGReporter.render([0.5] * 10, 0.4)
        for marker in ('href', '<script', '@import', 'url('):
            assert marker not in svg

    def test_bound_line_position(self):
        """Fidelity 1 sits on the top margin, 0 on the x axis."""
        svg = SVGReporter.render([1.0, 0.0], 0.0)
        assert '<circle cx="70.00" cy="50.00"' in svg
        assert '<circle cx="770.00" cy="540.00"' in svg
        assert 'y1="540.00"' in svg

    def test_empty_samples(self):
        svg = SVGReporter.render([], 0.5)
        assert '<circle' not in svg
        assert 'n = 0' in svg

    def test_generate(self, tmp_path):
        path = SVGReporter.generate([0.9], 0.8, tmp_path / 'plot.svg')
        assert path.exists()
        assert '<svg' in path.read_text(encoding='utf-8')

    def test_product_of_fixtures_bound(self):
        product = tensor_gates([load_fixture('cnot_local_a'), load_fixture('cnot_local_b')])
        bound = gate_fidelity_min(load_fixture('cnot'), product).f_min
        assert 'F_min = 0.7' in SVGReporter.render([bound], bound)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
