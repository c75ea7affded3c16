"""k-sparse acceptance on the 1.5-way tape.

A k-sparse guess is ``0**x1 d1 0**x2 d2 ... 0**xj dj 0 0 ...``.  The
walker is simulated block by block: zero blocks go through
:class:`ZeroBlockProcedure`, symbol cells take one step.  Every return to
cell 0 restarts the scan, and a restart state seen before means the run
loops forever.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm
from typing import Optional, Sequence

from ..constructions import WalkingAutomaton, surface_automaton
from ..machine import AutomatonSpec
from ..memory import MINUS, MemoryContent, build_model
from .brute import ResourceRefusal, default_cap
from .zeroblock import ACCEPT, PASS, RETURN, ZeroBlockProcedure


@dataclass(frozen=True)
class SparseGuessParams:
    """Gap lengths and non-zero symbols; a trailing gap after the last symbol is ignored."""

    gaps: tuple
    symbols: tuple

    def __post_init__(self):
        object.__setattr__(self, "gaps", tuple(self.gaps))
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(self.gaps) not in (len(self.symbols), len(self.symbols) + 1):
            raise ValueError("need one gap per symbol (plus an optional trailing gap)")
        if any(g < 0 for g in self.gaps):
            raise ValueError("gaps must be non-negative")

    def content(self, zero: str) -> MemoryContent:
        cells, pos = {}, 0
        for g, d in zip(self.gaps, self.symbols):
            pos += g
            cells[pos] = d
            pos += 1
        return MemoryContent(zero, cells)

    @classmethod
    def from_content(cls, content: MemoryContent) -> "SparseGuessParams":
        gaps, syms, pos = [], [], 0
        for cell in sorted(content.support):
            gaps.append(cell - pos)
            syms.append(content.support[cell])
            pos = cell + 1
        return cls(tuple(gaps), tuple(syms))


@dataclass(frozen=True)
class SparseVerdict:
    accepted: bool
    returns: int  # return moves made before the verdict

    def __bool__(self):
        return self.accepted


def run_on_sparse_guess(walker: WalkingAutomaton, params: SparseGuessParams,
                        f0: Optional[ZeroBlockProcedure] = None) -> SparseVerdict:
    f0 = f0 or ZeroBlockProcedure(walker)
    acc, dead = walker.accepting, walker.dead
    s, starts, returns = walker.start, set(), 0
    while True:
        if s in acc:
            return SparseVerdict(True, returns)
        if s == dead or s in starts:
            return SparseVerdict(False, returns)
        starts.add(s)
        for gap, d in zip(params.gaps, params.symbols):
            out = f0(s, gap)
            if out.kind == ACCEPT:
                return SparseVerdict(True, returns)
            s = out.state
            if out.kind == RETURN:
                break
            if s in acc:
                return SparseVerdict(True, returns)
            if s == dead:
                return SparseVerdict(False, returns)
            t, m = walker.delta[(s, d)], walker.moves[(s, d)]
            if t in acc:
                return SparseVerdict(True, returns)
            s = t
            if m == MINUS:
                break
        else:
            out = f0.tail(s)
            if out.kind == PASS:
                return SparseVerdict(False, returns)
            if out.kind == ACCEPT:
                return SparseVerdict(True, returns)
            s = out.state
        returns += 1


@dataclass(frozen=True)
class SparseDecision:
    accepted: bool
    witness: Optional[SparseGuessParams]
    threshold: int
    period: int
    candidates: int  # guesses evaluated

    def __bool__(self):
        return self.accepted


def gap_candidates(f0: ZeroBlockProcedure, modulus: str = "orbit") -> tuple:
    """``(threshold, period)``: gaps above threshold matter only mod period.

    ``modulus="orbit"`` uses the lcm of the zero-map cycle lengths;
    ``"lcm"`` uses ``lcm(1..#S)``, which that number always divides.
    """
    threshold = len(f0.walker)
    if modulus == "orbit":
        period = f0.cycle_lcm()
    elif modulus == "lcm":
        period = lcm(*range(1, threshold + 1))
    else:
        raise ValueError(f"unknown modulus {modulus!r}")
    return threshold, period


def _nonzero(symbols: Sequence[str], zero: str) -> list:
    return [d for d in symbols if d != zero]


def sparse_accept_decider_w15(spec: AutomatonSpec, word, k: int, cap: Optional[int] = None,
                              modulus: str = "orbit") -> SparseDecision:
    """Decide whether some guess with at most ``k`` non-zero cells leads to acceptance."""
    if k < 0:
        raise ValueError("k must be non-negative")
    cap = default_cap() if cap is None else cap
    model = build_model("W15")
    walker = surface_automaton(spec, model, word)
    f0 = ZeroBlockProcedure(walker)
    threshold, period = gap_candidates(f0, modulus)
    gaps = range(threshold + period + 1)
    nz = _nonzero(walker.symbols, walker.zero)
    total = sum((len(gaps) * len(nz)) ** j for j in range(k + 1))
    if total > cap:
        raise ResourceRefusal(f"{total} candidate guesses exceed the cap of {cap}")
    seen = 0
    for j in range(k + 1):
        for syms in itertools.product(nz, repeat=j):
            for gs in itertools.product(gaps, repeat=j):
                seen += 1
                params = SparseGuessParams(gs, syms)
                if run_on_sparse_guess(walker, params, f0):
                    return SparseDecision(True, params, threshold, period, seen)
    return SparseDecision(False, None, threshold, period, seen)
