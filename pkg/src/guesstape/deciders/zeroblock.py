"""Walker behaviour on runs of zeros of the 1.5-way tape, via Boolean powers.

The zero map of a walker is turned into a functional Boolean matrix over
the walker states plus one "returned in state q" node per state.
Accepting states and returned nodes are absorbing, so
``(alpha**n)[q, h] == 1`` for such a node ``h`` exactly when ``h`` is
reached within ``n`` zero cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Hashable, Optional

from ..constructions import WalkingAutomaton
from ..memory import MINUS
from .boolmat import BoolMatrix, bool_matrix_power

ACCEPT = "accept"
RETURN = "return"
PASS = "pass"


@dataclass(frozen=True)
class ZeroBlockOutcome:
    kind: str  # ACCEPT, RETURN or PASS
    state: Optional[Hashable] = None
    at: Optional[int] = None  # zero cells consumed before the accept/return

    def __str__(self):
        if self.kind == ACCEPT:
            return f"ACCEPT_WITHIN at={self.at}"
        if self.kind == RETURN:
            return f"RETURN state={self.state!r} at={self.at}"
        return f"PASS_THROUGH state={self.state!r}"


class ZeroBlockProcedure:
    """Answers "what happens from state q on ``0**x``" for huge ``x``."""

    def __init__(self, walker: WalkingAutomaton):
        self.walker = walker
        self.index = {s: i for i, s in enumerate(walker.states)}
        n = len(walker.states)
        self.n = n
        self.dim = 2 * n
        f = list(range(self.dim))
        for s, i in self.index.items():
            if walker.is_terminal(s) and s != walker.dead:
                continue
            t, m = walker.zero_map(s)
            j = self.index[t]
            if t in walker.accepting:
                f[i] = j
            elif m == MINUS:
                f[i] = n + j
            else:
                f[i] = j
        self.map = f
        self.alpha = BoolMatrix.from_map(self.dim, f)
        self.absorbing = {self.index[s] for s in walker.accepting} | set(range(n, 2 * n))
        self._powers = [self.alpha]
        self._cache: dict = {}

    def power(self, n: int) -> BoolMatrix:
        return bool_matrix_power(self.alpha, n)

    def _pow2(self, i: int) -> BoolMatrix:
        while len(self._powers) <= i:
            last = self._powers[-1]
            self._powers.append(last @ last)
        return self._powers[i]

    def _image(self, i: int, x: int) -> int:
        """Node reached from node ``i`` after ``x`` steps."""
        b = 0
        while x:
            if x & 1:
                i = self._pow2(b).rows[i].bit_length() - 1
            x >>= 1
            b += 1
        return i

    def _outcome(self, node: int, at: int) -> ZeroBlockOutcome:
        if node >= self.n:
            return ZeroBlockOutcome(RETURN, self.walker.states[node - self.n], at)
        return ZeroBlockOutcome(ACCEPT, self.walker.states[node], at)

    def __call__(self, q, x: int) -> ZeroBlockOutcome:
        key = (q, x)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._solve(self.index[q], x)
        return hit

    def _solve(self, i: int, x: int) -> ZeroBlockOutcome:
        end = self._image(i, x)
        if end not in self.absorbing:
            return ZeroBlockOutcome(PASS, self.walker.states[end])
        if i in self.absorbing:
            return self._outcome(i, 0)
        # binary search for the first step count landing in an absorbing
        # node, deciding one bit at a time from the top
        cur, steps = i, 0
        for b in range(max(x.bit_length() - 1, 0), -1, -1):
            if steps + (1 << b) > x:
                continue
            nxt = self._pow2(b).rows[cur].bit_length() - 1
            if nxt not in self.absorbing:
                cur, steps = nxt, steps + (1 << b)
        first = self.map[cur]
        return self._outcome(first, steps + 1)

    def tail(self, q) -> ZeroBlockOutcome:
        """Behaviour on the infinite zero tail; PASS means it never accepts or returns."""
        out = self(q, self.dim)
        if out.kind == PASS:
            return ZeroBlockOutcome(PASS, None)
        return out

    def cycle_lcm(self) -> int:
        """lcm of the cycle lengths of the zero map (a period for every orbit)."""
        f, seen_cycle, period = self.map, set(), 1
        for start in range(self.dim):
            pos, t = {}, 0
            i = start
            while i not in pos and i not in seen_cycle:
                pos[i] = t
                i, t = f[i], t + 1
            if i in pos:
                length = t - pos[i]
                period = lcm(period, length)
                j = i
                for _ in range(length):
                    seen_cycle.add(j)
                    j = f[j]
        return period


def f0_zero_block(walker: WalkingAutomaton, q, x: int) -> ZeroBlockOutcome:
    return ZeroBlockProcedure(walker)(q, x)
