"""Tests for progress indicator utilities."""

import pytest
from io import StringIO
from unittest.mock import patch

from gatesplit.utils.progress import (
    ProgressBar,
    progress_bar,
    is_tqdm_available,
    TQDM_AVAILABLE,
)


class TestProgressBar:
    """Test cases for ProgressBar class."""

    def test_basic_iteration(self):
        """Should iterate through all items."""
        items = [1, 2, 3, 4, 5]
        assert list(ProgressBar(items, disable=True)) == items

    def test_total_from_iterable(self):
        """Should get total from iterable length."""
        bar = ProgressBar([1, 2, 3, 4, 5], disable=True)
        assert bar.total == 5

    def test_explicit_total(self):
        """Should use explicit total."""
        bar = ProgressBar(iter([1, 2, 3]), total=10, disable=True)
        assert bar.total == 10

    def test_iterator_without_total(self):
        bar = ProgressBar(iter([1, 2, 3]), disable=True)
        assert bar.total is None

    def test_disabled_no_output(self, capfd):
        """Disabled progress should not output anything."""
        list(ProgressBar([1, 2, 3], desc="Sweep", disable=True))
        captured = capfd.readouterr()
        assert captured.out == ''
        assert captured.err == ''

    def test_default_stream_is_stderr(self):
        import sys
        assert ProgressBar([], disable=True).file is sys.stderr


class TestProgressBarWithoutTqdm:
    """Test progress bar fallback behavior without tqdm."""

    def test_simple_progress_output(self):
        """Should show simple progress without tqdm."""
        items = list(range(10))

        with patch('gatesplit.utils.progress.TQDM_AVAILABLE', False):
            with patch('gatesplit.utils.progress.tqdm', None):
                output = StringIO()
                result = list(ProgressBar(items, desc="Validation sweep", file=output))

                assert result == items
                assert "Validation sweep" in output.getvalue()
                assert "10/10" in output.getvalue()

    def test_percentage_display(self):
        """Should display percentage in simple mode."""
        output = StringIO()
        bar = ProgressBar(list(range(100)), total=100, file=output, miniters=10, unit='trials')

        list(bar._simple_progress())

        content = output.getvalue()
        assert '100.0%' in content
        assert 'trials' in content

    def test_never_writes_stdout(self, capfd):
        with patch('gatesplit.utils.progress.TQDM_AVAILABLE', False):
            list(ProgressBar(range(5), desc="Sweep"))
        captured = capfd.readouterr()
        assert captured.out == ''
        assert "Sweep" in captured.err


class TestProgressBarFunction:
    """Test cases for progress_bar function."""

    def test_function_returns_iterator(self):
        """Should return an iterator."""
        result = progress_bar([1, 2, 3], disable=True)
        assert next(result) == 1
        assert list(result) == [2, 3]

    def test_function_with_options(self):
        """Should accept all options."""
        result = progress_bar([1, 2, 3], desc="Test", total=3, disable=True, unit="trials")
        assert list(result) == [1, 2, 3]


class TestIsTqdmAvailable:
    """Test cases for is_tqdm_available function."""

    def test_returns_bool(self):
        assert isinstance(is_tqdm_available(), bool)

    def test_matches_constant(self):
        assert is_tqdm_available() == TQDM_AVAILABLE


class TestIntegration:
    """Integration tests for progress utilities."""

    def test_nested_progress(self):
        """Should handle nested progress bars."""
        results = []
        for outer in ProgressBar([1, 2, 3], desc="Outer", disable=True):
            for inner in ProgressBar(['a', 'b'], desc="Inner", disable=True):
                results.append((outer, inner))

        assert len(results) == 6

    def test_empty_iterable(self):
        assert list(ProgressBar([], disable=True)) == []

    def test_generator_input(self):
        """Should work with generators."""
        def gen():
            yield from range(5)

        assert list(ProgressBar(gen(), total=5, disable=True)) == [0, 1, 2, 3, 4]


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
