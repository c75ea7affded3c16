"""k-sparse acceptance on the two-way tape.

The non-zero cells and the origin split the tape into zero blocks.  A
walker entering a block from one end either accepts inside it, leaves by
one of the two ends, or never leaves; zero orbits answer this for any
block length.  Beyond a threshold a block's length only matters modulo
the lcm of the orbit shifts, which bounds the gaps worth guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm
from typing import Optional

from ..constructions import WalkingAutomaton, surface_automaton
from ..machine import AutomatonSpec
from ..memory import MINUS, PLUS, MemoryContent, build_model
from .brute import ResourceRefusal, default_cap
from .trajectory import Orbit, zero_orbit


class BlockOracle:
    """Exit behaviour of zero blocks for every walker state and both entry sides."""

    def __init__(self, walker: WalkingAutomaton):
        self.walker = walker
        self.right = {s: zero_orbit(walker, s, 1) for s in walker.states}
        self.left = {s: zero_orbit(walker, s, -1) for s in walker.states}

    def exit(self, s, length: Optional[int], entering_right: bool):
        """Outcome of entering a block of ``length`` zeros (None: unbounded).

        ``entering_right`` means the walker moved '+' into the block's near
        end.  Returns ``("accept", None)``, ``("back", state)``,
        ``("through", state)`` or ``("stuck", None)``.
        """
        orbit = (self.right if entering_right else self.left)[s]
        back = orbit.first_hit(-1)
        through = orbit.first_hit(length) if length is not None else None
        if orbit.halted_at is not None:
            if all(t is None or t >= orbit.halted_at for t in (back, through)):
                return "accept", None
        hits = [(t, kind) for t, kind in ((back, "back"), (through, "through")) if t is not None]
        if not hits:
            return "stuck", None
        t, kind = min(hits)
        return kind, orbit.state_at(t)

    def bounds(self) -> tuple:
        """``(threshold, period)`` for the gap candidates."""
        threshold = len(self.walker)
        period = 1
        for orbit in list(self.right.values()) + list(self.left.values()):
            span = orbit.positions[:orbit.transient + orbit.period + 1]
            threshold = max(threshold, max(span) + 1)
            d = orbit.displacement
            if d > 0:
                period = lcm(period, d)
        return threshold, period


@dataclass(frozen=True)
class Layout:
    """Non-zero cells as ``(position, symbol)`` pairs, sorted by position."""

    cells: tuple

    def content(self, zero: str) -> MemoryContent:
        return MemoryContent(zero, dict(self.cells))


def evaluate_layout(oracle: BlockOracle, layout: Layout) -> bool:
    walker = oracle.walker
    marks = list(layout.cells)
    if not any(p == 0 for p, _ in marks):
        marks.append((0, walker.zero))
        marks.sort()
    pos = [p for p, _ in marks]
    sym = [d for _, d in marks]
    i = pos.index(0)
    s, seen = walker.start, set()
    while True:
        if s in walker.accepting:
            return True
        if s == walker.dead or (s, i) in seen:
            return False
        seen.add((s, i))
        t, m = walker.delta[(s, sym[i])], walker.moves[(s, sym[i])]
        if t in walker.accepting:
            return True
        if m == PLUS:
            length = pos[i + 1] - pos[i] - 1 if i + 1 < len(pos) else None
            step = 1
        elif m == MINUS:
            length = pos[i] - pos[i - 1] - 1 if i > 0 else None
            step = -1
        else:
            return False
        if length == 0:
            s, i = t, i + step
            continue
        kind, nxt = oracle.exit(t, length, m == PLUS)
        if kind == "accept":
            return True
        if kind == "stuck":
            return False
        s = nxt
        if kind == "through":
            i += step


@dataclass(frozen=True)
class SparseDecision2:
    accepted: bool
    witness: Optional[Layout]
    threshold: int
    period: int
    candidates: int

    def __bool__(self):
        return self.accepted


def _layouts(nz, j, gaps):
    """Every layout with exactly ``j`` non-zero cells and gaps drawn from ``gaps``."""
    for at_origin in ((False, True) if j else (False,)):
        rest = j - at_origin
        for n_left in range(rest + 1):
            n_right = rest - n_left
            for gs in itertools.product(gaps, repeat=rest):
                cells, p = [], 0
                for g in gs[:n_left]:
                    p -= g + 1
                    cells.append(p)
                p = 0
                for g in gs[n_left:]:
                    p += g + 1
                    cells.append(p)
                if at_origin:
                    cells.append(0)
                cells.sort()
                for syms in itertools.product(nz, repeat=j):
                    yield Layout(tuple(zip(cells, syms)))


def sparse_accept_decider_w2(spec: AutomatonSpec, word, k: int,
                             cap: Optional[int] = None) -> SparseDecision2:
    """Decide whether some guess with at most ``k`` non-zero cells leads to acceptance."""
    if k < 0:
        raise ValueError("k must be non-negative")
    cap = default_cap() if cap is None else cap
    walker = surface_automaton(spec, build_model("W2"), word)
    oracle = BlockOracle(walker)
    threshold, period = oracle.bounds()
    gaps = range(threshold + period + 1)
    nz = [d for d in walker.symbols if d != walker.zero]
    total = sum((2 * j + 1) * (len(gaps) * len(nz)) ** j for j in range(k + 1))
    if total > cap:
        raise ResourceRefusal(f"about {total} candidate guesses exceed the cap of {cap}")
    seen = 0
    for j in range(k + 1):
        for layout in _layouts(nz, j, gaps):
            seen += 1
            if evaluate_layout(oracle, layout):
                return SparseDecision2(True, layout, threshold, period, seen)
    return SparseDecision2(False, None, threshold, period, seen)
