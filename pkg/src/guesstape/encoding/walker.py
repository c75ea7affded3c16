"""A log-space verifier's view of a 1.5-way guess tape.

The head supports exactly three primitives: advance along '+', reset to
the first cell along '-', and read the current cell.  Numbers are kept in
:class:`ModCounter` registers whose values stay below their modulus.
:meth:`LogSpaceWalker.skip_run` is advance-and-count in bulk; it gives the
same head position and counter value as the step-by-step loop.
"""

from __future__ import annotations

import bisect
from typing import Optional

from ..memory import MemoryContent


class DisciplineError(RuntimeError):
    """A counter exceeded its modulus."""


class ModCounter:
    __slots__ = ("modulus", "value", "peak")

    def __init__(self, modulus: int, value: int = 0):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.modulus = modulus
        self.value = value % modulus
        self.peak = self.value

    def add(self, n: int) -> None:
        self.value = (self.value + n) % self.modulus
        self._check()

    def double_plus(self, bit: int) -> None:
        self.value = (2 * self.value + bit) % self.modulus
        self._check()

    def _check(self):
        if not 0 <= self.value < self.modulus:
            raise DisciplineError(f"counter value {self.value} outside [0, {self.modulus})")
        self.peak = max(self.peak, self.value)


class LogSpaceWalker:
    def __init__(self, content: MemoryContent, fast: bool = True):
        self.content = content
        self.fast = fast
        self.cell = 0
        self.reads = self.advances = self.resets = 0
        self.counters: list = []
        # maximal runs [start, end) over 0..max support, filled with the default
        cells = sorted(content.support)
        runs, pos = [], 0
        for c in cells:
            if c > pos:
                runs.append((pos, c, content.default))
            sym = content.support[c]
            if runs and runs[-1][1] == c and runs[-1][2] == sym:
                runs[-1] = (runs[-1][0], c + 1, sym)
            else:
                runs.append((c, c + 1, sym))
            pos = c + 1
        self._runs = runs
        self._starts = [r[0] for r in runs]
        self._end = pos

    def counter(self, modulus: int, value: int = 0) -> ModCounter:
        c = ModCounter(modulus, value)
        self.counters.append(c)
        return c

    def advance(self) -> None:
        self.advances += 1
        self.cell += 1

    def reset(self) -> None:
        self.resets += 1
        self.cell = 0

    def read(self) -> str:
        self.reads += 1
        return self.content.read(self.cell)

    def skip_run(self, symbol: str, counter: Optional[ModCounter] = None,
                 limit: Optional[int] = None) -> Optional[int]:
        """Advance while the current cell holds ``symbol``, counting into ``counter``.

        Returns the number of cells skipped, or None if the run is longer
        than ``limit`` (unbounded runs past the support always are, when a
        limit is given).  The skipped length itself is only reported for
        the caller's finite control to test against zero.
        """
        if not self.fast:
            n = 0
            while self.read() == symbol:
                if limit is None and self.cell >= self._end:
                    raise DisciplineError("unbounded run past the guess support")
                if limit is not None and n >= limit:
                    return None
                self.advance()
                if counter is not None:
                    counter.add(1)
                n += 1
            return n
        self.reads += 1
        if self.cell >= self._end:
            if symbol != self.content.default:
                return 0
            if limit is None:
                raise DisciplineError("unbounded run past the guess support")
            return None
        i = bisect.bisect_right(self._starts, self.cell) - 1
        start, end, sym = self._runs[i]
        if sym != symbol:
            return 0
        n = end - self.cell
        if limit is not None and n > limit:
            return None
        self.advances += n
        self.cell = end
        if counter is not None:
            counter.add(n)
        return n

    def discipline_ok(self) -> bool:
        return all(0 <= c.peak < c.modulus for c in self.counters)
