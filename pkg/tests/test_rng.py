"""Tests for seeded substreams and input validators."""

import numpy as np
import pytest

from gatesplit.core.errors import DomainError
from gatesplit.utils.rng import SEED_MAX, check_seed, substream
from gatesplit.utils.validators import check_range, is_fixture_name, parse_dims, validate_partition


class TestSubstream:
    """Test cases for substream."""

    def test_same_path_same_draws(self):
        a = substream(42, 'restart', 1, 'particle', 3).random(5)
        b = substream(42, 'restart', 1, 'particle', 3).random(5)
        assert np.array_equal(a, b)

    def test_paths_are_independent(self):
        draws = {
            tuple(substream(42, *path).random(3))
            for path in [(), ('restart', 0), ('restart', 1), ('state', 0), ('state', 1)]
        }
        assert len(draws) == 5

    def test_seed_changes_draws(self):
        assert substream(1, 'x').random() != substream(2, 'x').random()

    def test_order_of_creation_does_not_matter(self):
        first = substream(7, 'state', 9).random()
        for i in range(9):
            substream(7, 'state', i).random(100)
        assert substream(7, 'state', 9).random() == first

    def test_negative_index(self):
        with pytest.raises(DomainError):
            substream(1, -1)


class TestCheckSeed:
    """Test cases for check_seed."""

    @pytest.mark.parametrize('seed', [0, 42, SEED_MAX - 1, np.uint64(5)])
    def test_valid(self, seed):
        assert check_seed(seed) == int(seed)

    @pytest.mark.parametrize('seed', [-1, SEED_MAX, 1.5, True, '42'])
    def test_invalid(self, seed):
        with pytest.raises(DomainError):
            check_seed(seed)


class TestValidators:
    """Test cases for the partition and range validators."""

    @pytest.mark.parametrize('text,expected', [
        ('2,2', [2, 2]),
        ('2, 2, 2', [2, 2, 2]),
        ('3,2', [3, 2]),
        ('4', [4]),
    ])
    def test_parse_dims(self, text, expected):
        assert parse_dims(text) == expected

    @pytest.mark.parametrize('text', ['', '2,', 'a,b', '2;2', '2,0', '-2,2'])
    def test_parse_dims_invalid(self, text):
        with pytest.raises(DomainError):
            parse_dims(text)

    def test_validate_partition_product(self):
        assert validate_partition([2, 3], 6) == [2, 3]
        with pytest.raises(DomainError):
            validate_partition([2, 2], 6)

    def test_validate_partition_empty(self):
        with pytest.raises(DomainError):
            validate_partition([])

    def test_check_range_closed(self):
        assert check_range('eps', 0.0, 0.0, 1.0) == 0.0
        assert check_range('d', 2.0 + 1e-12, 0.0, 2.0, slack=1e-9) == 2.0

    def test_check_range_open(self):
        with pytest.raises(DomainError):
            check_range('eps', 0.0, 0.0, 1.0, low_open=True)
        with pytest.raises(DomainError):
            check_range('eps', 1.0, 0.0, 1.0, high_open=True)

    def test_check_range_nan(self):
        with pytest.raises(DomainError):
            check_range('eps', float('nan'), 0.0, 1.0)

    @pytest.mark.parametrize('ref,expected', [
        ('cnot', True),
        ('cnot_local_a', True),
        ('gates/cnot.json', False),
        ('CNOT', False),
        ('my gate', False),
    ])
    def test_is_fixture_name(self, ref, expected):
        assert is_fixture_name(ref) is expected
