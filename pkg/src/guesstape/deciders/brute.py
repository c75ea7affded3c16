"""Exhaustive guess search: the reference oracle for every decider."""

from __future__ import annotations

import itertools
import os
from math import comb
from typing import Iterator, Optional, Sequence

from ..machine import AutomatonSpec, run
from ..memory import MemoryContent, MemoryModel, Sparse, Unrestricted

CAP_ENV = "GUESSTAPE_CAP"


class ResourceRefusal(RuntimeError):
    """The requested search is larger than the configured cap."""


def default_cap() -> int:
    return int(os.environ.get(CAP_ENV, 5_000_000))


def _symbol_order(spec: AutomatonSpec) -> list:
    return [spec.zero] + [d for d in spec.memory_alphabet if d != spec.zero]


def count_contents(n_cells: int, n_symbols: int, constraint) -> int:
    if isinstance(constraint, Sparse):
        return sum(comb(n_cells, j) * (n_symbols - 1) ** j
                   for j in range(min(constraint.k, n_cells) + 1))
    return n_symbols ** n_cells


def enumerate_contents(cells: Sequence, symbols: Sequence[str], constraint) -> Iterator[MemoryContent]:
    """Contents supported on ``cells`` in lexicographic order.

    Contents are compared as vectors indexed by ``cells`` whose entries are
    positions in ``symbols``; ``symbols[0]`` is the default.
    """
    zero = symbols[0]
    if isinstance(constraint, Unrestricted):
        for combo in itertools.product(symbols, repeat=len(cells)):
            yield MemoryContent(zero, dict(zip(cells, combo)))
        return
    nonzero = symbols[1:]

    def rec(i, left):
        if i == len(cells):
            yield {}
            return
        yield from rec(i + 1, left)
        if left:
            for sym in nonzero:
                for rest in rec(i + 1, left - 1):
                    rest[cells[i]] = sym
                    yield rest

    for support in rec(0, constraint.k):
        yield MemoryContent(zero, support)


def brute_force_accepts(spec: AutomatonSpec, model: MemoryModel, word, constraint,
                        window: int, budget: int, cap: Optional[int] = None
                        ) -> Optional[MemoryContent]:
    """First content (lexicographically) on which ``spec`` accepts within ``budget``.

    The search ranges over contents supported on ``model.window_cells(window)``
    that satisfy ``constraint``.  Returns None when there is no such content.
    """
    if window < 1:
        raise ValueError("window must be at least 1")
    if isinstance(constraint, Sparse) and constraint.zero != spec.zero:
        raise ValueError("sparse constraint must use the spec's zero symbol")
    cap = default_cap() if cap is None else cap
    cells = model.window_cells(window)
    symbols = _symbol_order(spec)
    total = count_contents(len(cells), len(symbols), constraint)
    if total > cap:
        raise ResourceRefusal(f"{total} candidate contents exceed the cap of {cap}")
    for content in enumerate_contents(cells, symbols, constraint):
        outcome, _ = run(spec, model, content, word, budget)
        if outcome.accepted:
            return content
    return None
