"""Progress display for long sweeps, on stderr; tqdm when installed."""

import sys
from typing import Iterable, Iterator, Optional, TextIO, TypeVar

T = TypeVar('T')

# optional extra: pip install gatesplit[progress]
try:
    from tqdm import tqdm
    TQDM_AVAILABLE = True
except ImportError:
    TQDM_AVAILABLE = False
    tqdm = None


class ProgressBar:
    """
    Iterate with a progress display.

    Uses tqdm when it is importable; otherwise rewrites one
    ``desc: done/total unit (pct%)`` line every ``miniters`` items. Output
    never touches stdout. ``total`` defaults to ``len(iterable)`` when the
    iterable has one (a ``ThreadPoolExecutor.map`` result does not, so
    callers pass it).
    """

    def __init__(
        self,
        iterable: Iterable[T],
        desc: Optional[str] = None,
        total: Optional[int] = None,
        disable: bool = False,
        unit: str = 'it',
        file: Optional[TextIO] = None,
        miniters: int = 1,
    ):
        self.iterable = iterable
        self.desc = desc
        self.disable = disable
        self.unit = unit
        self.file = file or sys.stderr
        self.miniters = max(1, miniters)
        self.total = total if total is not None else _length(iterable)

    def __iter__(self) -> Iterator[T]:
        if self.disable:
            return iter(self.iterable)
        if TQDM_AVAILABLE and tqdm is not None:
            return iter(tqdm(self.iterable, desc=self.desc, total=self.total, unit=self.unit,
                             leave=False, file=self.file, miniters=self.miniters))
        return self._simple_progress()

    def _line(self, done: int) -> str:
        prefix = f"{self.desc}: " if self.desc else ''
        if not self.total:
            return f"{prefix}{done} {self.unit}"
        return f"{prefix}{done}/{self.total} {self.unit} ({100.0 * done / self.total:.1f}%)"

    def _simple_progress(self) -> Iterator[T]:
        done = 0
        for item in self.iterable:
            yield item
            done += 1
            if done % self.miniters == 0 or done == self.total:
                print(f"\r{self._line(done)}", end='', file=self.file, flush=True)
        if done % self.miniters and done != self.total:
            print(f"\r{self._line(done)}", end='', file=self.file, flush=True)
        if done:
            print(file=self.file, flush=True)


def _length(iterable) -> Optional[int]:
    try:
        return len(iterable)
    except TypeError:
        return None


def progress_bar(
    iterable: Iterable[T],
    desc: Optional[str] = None,
    total: Optional[int] = None,
    disable: bool = False,
    unit: str = 'it',
) -> Iterator[T]:
    return iter(ProgressBar(iterable, desc=desc, total=total, disable=disable, unit=unit))


def is_tqdm_available() -> bool:
    return TQDM_AVAILABLE
