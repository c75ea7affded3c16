"""Search for a consistent guess route that reaches acceptance quickly.

A route is what a walker sees along one run: the symbol read at each
step and the mark it then follows.  It is realisable by some guess iff
every two route positions landing on the same memory cell read the same
symbol.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from ..constructions import WalkingAutomaton
from ..memory import MemoryContent, MemoryModel, route_cells
from .brute import ResourceRefusal, default_cap


@dataclass(frozen=True)
class HaltingRoute:
    symbols: tuple  # symbol read at step i
    marks: tuple  # mark followed after step i (None for the accepting stay)
    states: tuple  # walker state before step i, then the accepting state

    def __len__(self):
        return len(self.symbols)

    def content(self, model: MemoryModel, zero: str) -> MemoryContent:
        cells, _ = route_cells(model, [m for m in self.marks if m is not None])
        return MemoryContent(zero, dict(zip(cells, self.symbols)))


def route_consistent(model: MemoryModel, marks, symbols) -> bool:
    """Whether positions in the same cell class read equal symbols."""
    _, classes = route_cells(model, [m for m in marks if m is not None])
    for cls in classes:
        seen = {symbols[i] for i in cls if i < len(symbols)}
        if len(seen) > 1:
            return False
    return True


def bounded_halting_search(walker: WalkingAutomaton, model: MemoryModel, horizon: int,
                           cap: Optional[int] = None) -> Optional[HaltingRoute]:
    """Shortest consistent route to acceptance with at most ``horizon`` steps."""
    cap = default_cap() if cap is None else cap
    if walker.start in walker.accepting:
        return HaltingRoute((), (), (walker.start,))
    # each node: state, cell, cell -> symbol read so far, route so far
    queue = deque([(walker.start, model.initial, {}, (), (), (walker.start,))])
    expanded = 0
    while queue:
        s, cell, seen, syms, marks, states = queue.popleft()
        if len(syms) >= horizon or walker.is_terminal(s):
            continue
        for d in walker.symbols:
            if seen.get(cell, d) != d:
                continue
            expanded += 1
            if expanded > cap:
                raise ResourceRefusal(f"route search exceeded the cap of {cap} branches")
            t, m = walker.delta[(s, d)], walker.moves[(s, d)]
            nsyms, nmarks, nstates = syms + (d,), marks + (m,), states + (t,)
            if t in walker.accepting:
                assert route_consistent(model, nmarks, nsyms)
                return HaltingRoute(nsyms, nmarks, nstates)
            nseen = dict(seen)
            nseen[cell] = d
            queue.append((t, model.neighbor(cell, m), nseen, nsyms, nmarks, nstates))
    return None
