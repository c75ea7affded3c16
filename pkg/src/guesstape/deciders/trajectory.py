"""Trajectories of a walker on the all-zero two-way tape.

On zeros a walker is a function of its state, so its orbit is a
transient followed by a cycle; one pass of the cycle shifts the head by a
fixed displacement.  That leaves three behaviours: it accepts, it stays
in a bounded window, or it drifts one way at a constant rate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..constructions import WalkingAutomaton
from ..memory import MINUS, PLUS

HALTING = "halting"
PERIODIC = "periodic"
SHIFT = "right-shift"


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class Orbit:
    """Zero-tape orbit from one state, head starting at position 0.

    ``states[t]`` and ``positions[t]`` describe time ``t`` for
    ``t < transient + period``; ``positions`` has one extra entry for time
    ``transient + period``.  A halting orbit has ``period == 0`` and ends
    with the accepting state at time ``halted_at``.
    """

    states: tuple
    positions: tuple
    transient: int
    period: int
    halted_at: Optional[int]

    @property
    def displacement(self) -> int:
        if self.halted_at is not None:
            return 0
        return self.positions[self.transient + self.period] - self.positions[self.transient]

    def _split(self, t: int):
        i, o = divmod(t - self.transient, self.period)
        return i, o

    def state_at(self, t: int):
        if self.halted_at is not None:
            return self.states[min(t, self.halted_at)]
        if t < len(self.states):
            return self.states[t]
        _, o = self._split(t)
        return self.states[self.transient + o]

    def position_at(self, t: int) -> int:
        if self.halted_at is not None:
            return self.positions[min(t, self.halted_at)]
        if t < len(self.positions):
            return self.positions[t]
        i, o = self._split(t)
        return self.positions[self.transient + o] + i * self.displacement

    def first_hit(self, level: int) -> Optional[int]:
        """First time the head is at ``level`` (or beyond, away from 0); None if never."""
        if level == 0:
            return 0
        up = level > 0
        for t, p in enumerate(self.positions):
            if (p >= level) if up else (p <= level):
                return t
        d = self.displacement
        if self.halted_at is not None or d == 0 or (d > 0) != up:
            return None
        best = None
        for o in range(self.period):
            base = self.positions[self.transient + o]
            i = max(1, _ceil_div(level - base, d) if up else _ceil_div(base - level, -d))
            t = self.transient + i * self.period + o
            best = t if best is None else min(best, t)
        return best


def zero_orbit(walker: WalkingAutomaton, q, direction: int = 1) -> Orbit:
    """Orbit of ``q`` on zeros; ``direction=-1`` mirrors the tape."""
    step = {PLUS: direction, MINUS: -direction, None: 0}
    states, positions, seen = [], [0], {}
    s, pos = q, 0
    while True:
        if s in walker.accepting:
            states.append(s)
            return Orbit(tuple(states), tuple(positions), len(states) - 1, 0, len(states) - 1)
        if s in seen:
            t0 = seen[s]
            return Orbit(tuple(states), tuple(positions), t0, len(states) - t0, None)
        seen[s] = len(states)
        states.append(s)
        t, m = walker.zero_map(s)
        s, pos = t, pos + step[m]
        positions.append(pos)


@dataclass(frozen=True)
class TrajectoryClass:
    kind: str  # HALTING, PERIODIC or SHIFT
    orbit: Orbit
    steps: Optional[int] = None  # time of acceptance when halting
    width: Optional[int] = None  # cells swept by the cycle when periodic
    shift: Optional[int] = None  # signed displacement per period when shifting
    period: Optional[int] = None

    def state_at(self, t: int):
        return self.orbit.state_at(t)

    def position_at(self, t: int) -> int:
        return self.orbit.position_at(t)

    def __str__(self):
        if self.kind == HALTING:
            return f"HALTING outcome=accept steps={self.steps}"
        if self.kind == PERIODIC:
            return f"PERIODIC width={self.width} period={self.period}"
        return f"RIGHT_SHIFT shift={self.shift} period={self.period}"


def classify_trajectory(walker: WalkingAutomaton, q) -> TrajectoryClass:
    orbit = zero_orbit(walker, q)
    if orbit.halted_at is not None:
        return TrajectoryClass(HALTING, orbit, steps=orbit.halted_at)
    d = orbit.displacement
    if d == 0:
        cyc = orbit.positions[orbit.transient:orbit.transient + orbit.period]
        return TrajectoryClass(PERIODIC, orbit, width=max(cyc) - min(cyc) + 1,
                               period=orbit.period)
    return TrajectoryClass(SHIFT, orbit, shift=d, period=orbit.period)
