"""Tests for the gate JSON format and built-in fixtures."""

import json

import numpy as np
import pytest

from gatesplit.core.errors import GateFormatError
from gatesplit.core.gate_io import (
    FIXTURE_PROJECTION_LIMIT,
    fixture_names,
    fixture_raw_matrix,
    gate_from_dict,
    gate_to_dict,
    gate_to_json,
    load_fixture,
    load_gate_file,
    resolve_gate,
    save_gate_file,
)
from gatesplit.core.linalg import haar_unitary


class TestFixtures:
    """Test cases for the built-in fixture table."""

    def test_names(self):
        names = fixture_names()
        for name in ('cnot', 'swap', 'cz', 'identity4', 'cnot_local_a', 'cnot_local_b'):
            assert name in names
        assert names == sorted(names)

    def test_cnot(self):
        cnot = load_fixture('cnot')
        assert cnot.partition == (2, 2)
        assert cnot.name == 'cnot'
        assert cnot.matrix[2, 3] == 1 and cnot.matrix[3, 2] == 1

    def test_iswap_complex_entries(self):
        assert load_fixture('iswap').matrix[1, 2] == 1j

    def test_printed_pair_is_projected(self):
        for name in ('cnot_local_a', 'cnot_local_b'):
            gate = load_fixture(name)
            assert 0 < gate.projection_distance <= FIXTURE_PROJECTION_LIMIT
            assert gate.unitarity_defect < 1e-12
            assert np.linalg.norm(gate.matrix - fixture_raw_matrix(name)) <= 1e-3

    def test_fixture_is_cached(self):
        assert load_fixture('swap') is load_fixture('swap')

    def test_unknown_fixture(self):
        with pytest.raises(GateFormatError) as exc_info:
            load_fixture('hadamard')
        assert 'cnot' in str(exc_info.value)


class TestGateDict:
    """Test cases for gate_from_dict and gate_to_dict."""

    def test_round_trip_random_gate(self):
        gate = haar_unitary(4, 3, partition=(2, 2))
        parsed = gate_from_dict(gate_to_dict(gate))
        assert np.array_equal(parsed.matrix, gate.matrix)
        assert parsed.partition == (2, 2)

    def test_entry_forms(self):
        data = {'dims': [2], 'matrix': [[0, [0, -1]], [{'re': 0.0, 'im': 1.0}, 0.0]]}
        gate = gate_from_dict(data)
        assert np.array_equal(gate.matrix, np.array([[0, -1j], [1j, 0]]))

    @pytest.mark.parametrize('data', [
        [],
        {'dims': [2]},
        {'matrix': [[1, 0], [0, 1]]},
        {'dims': '2', 'matrix': [[1, 0], [0, 1]]},
        {'dims': [2], 'matrix': []},
        {'dims': [2], 'matrix': [[1, 0], [0]]},
        {'dims': [2], 'matrix': [[1, 0], [0, 'one']]},
        {'dims': [2], 'matrix': [[{'re': 1}, 0], [0, 1]]},
        {'dims': [2], 'matrix': [[[1, 0, 0], 0], [0, 1]]},
        {'dims': [2], 'matrix': [[True, 0], [0, 1]]},
        {'dims': [3], 'matrix': [[1, 0], [0, 1]]},
        {'dims': [2], 'matrix': [[2, 0], [0, 1]]},
        {'dims': [2], 'matrix': [[1, 0], [0, 0]]},
    ])
    def test_malformed(self, data):
        with pytest.raises(GateFormatError):
            gate_from_dict(data)

    def test_unitarize(self):
        data = {'dims': [2], 'matrix': [[1.0001, 0], [0, 0.9999]]}
        with pytest.raises(GateFormatError):
            gate_from_dict(data)
        gate = gate_from_dict(data, unitarize=True)
        assert np.allclose(gate.matrix, np.eye(2))
        assert gate.projection_distance == pytest.approx(np.sqrt(2) * 1e-4, rel=1e-6)

    def test_unitarize_singular(self):
        with pytest.raises(GateFormatError):
            gate_from_dict({'dims': [2], 'matrix': [[1, 0], [0, 0]]}, unitarize=True)

    def test_to_json(self):
        data = json.loads(gate_to_json(load_fixture('cz')))
        assert data['dims'] == [2, 2]
        assert data['matrix'][3][3] == {'re': -1.0, 'im': 0.0}


class TestGateFiles:
    """Test cases for gate files and CLI references."""

    def test_save_and_load(self, tmp_path):
        gate = haar_unitary(2, 5)
        path = save_gate_file(gate, tmp_path / 'nested' / 'u.json')
        loaded = load_gate_file(path)
        assert np.array_equal(loaded.matrix, gate.matrix)
        assert loaded.name == 'u'

    def test_bom_accepted(self, tmp_path):
        path = tmp_path / 'bom.json'
        path.write_text('\ufeff' + gate_to_json(load_fixture('cnot')), encoding='utf-8')
        assert load_gate_file(path).dim == 4

    def test_invalid_json(self, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text('{"dims": [2], "matrix": ', encoding='utf-8')
        with pytest.raises(GateFormatError):
            load_gate_file(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(GateFormatError):
            load_gate_file(tmp_path / 'missing.json')

    def test_resolve_fixture(self):
        assert resolve_gate('cnot') is load_fixture('cnot')

    def test_resolve_path(self, tmp_path):
        path = save_gate_file(load_fixture('swap'), tmp_path / 'swap.json')
        assert np.array_equal(resolve_gate(str(path)).matrix, load_fixture('swap').matrix)

    def test_resolve_unknown(self):
        with pytest.raises(GateFormatError):
            resolve_gate('no_such_gate')

    def test_resolve_unitarize(self, tmp_path):
        path = tmp_path / 'rough.json'
        path.write_text(json.dumps({'dims': [2], 'matrix': [[1.0001, 0], [0, 1]]}), encoding='utf-8')
        with pytest.raises(GateFormatError):
            resolve_gate(str(path))
        assert resolve_gate(str(path), unitarize=True).flagged is False
