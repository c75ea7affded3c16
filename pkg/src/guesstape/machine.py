"""Multi-head 2-way automata reading a guess memory, and WORM automata.

Heads run over the marked input ``< w >`` (positions ``0..n+1``) and all
start on position 1.  The machine halts exactly when it enters an
accepting state; a run that never does so is cut off by a step budget.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Optional, Sequence

from .memory import MemoryContent, MemoryModel

LEFT_END = "<"
RIGHT_END = ">"


class SpecError(ValueError):
    pass


class HeadFault(RuntimeError):
    """A head was commanded past an endmarker."""


@dataclass(frozen=True)
class Transition:
    next: Hashable
    moves: tuple
    command: Optional[str] = None  # a memory mark, or None to stay


@dataclass(frozen=True, eq=False)
class AutomatonSpec:
    """Finite control of an ``heads``-head automaton.

    ``delta`` maps ``(state, input_symbols, memory_symbol)`` to a
    :class:`Transition`, where ``input_symbols`` is a tuple with one entry
    per head drawn from the input alphabet plus the endmarkers.
    """

    states: tuple
    heads: int
    input_alphabet: tuple
    memory_alphabet: tuple
    zero: str
    delta: Mapping
    initial: Hashable
    accepting: frozenset

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "states", tuple(self.states))

    @property
    def tape_symbols(self) -> tuple:
        return (LEFT_END,) + tuple(self.input_alphabet) + (RIGHT_END,)

    def keys(self):
        """Every ``(state, inputs, symbol)`` tuple on which delta must be defined."""
        for q in self.states:
            if q in self.accepting:
                continue
            for ins in itertools.product(self.tape_symbols, repeat=self.heads):
                for d in self.memory_alphabet:
                    yield (q, ins, d)

    def surface_count(self, n: int) -> int:
        return len(self.states) * (n + 2) ** self.heads


@dataclass(frozen=True, eq=False)
class WormSpec:
    """A deterministic automaton over a write-once memory.

    ``fill`` assigns the symbol written by each writing state.  Cells start
    void; the void symbol never appears in ``automaton.memory_alphabet``.
    """

    automaton: AutomatonSpec
    writing: frozenset
    fill: Mapping

    def __post_init__(self):
        object.__setattr__(self, "writing", frozenset(self.writing))


def validate_spec(spec, model: Optional[MemoryModel] = None) -> list:
    """Return a list of human-readable problems; empty means valid."""
    worm = None
    if isinstance(spec, WormSpec):
        worm, spec = spec, spec.automaton
    problems = []
    states = set(spec.states)
    if len(states) != len(spec.states):
        problems.append("duplicate state names")
    if spec.heads < 1:
        problems.append("need at least one head")
    for end in (LEFT_END, RIGHT_END):
        if end in spec.input_alphabet:
            problems.append(f"endmarker {end!r} used as an input symbol")
    if spec.zero not in spec.memory_alphabet:
        problems.append(f"zero symbol {spec.zero!r} not in memory alphabet")
    if spec.initial not in states:
        problems.append(f"initial state {spec.initial!r} unknown")
    for q in spec.accepting - states:
        problems.append(f"accepting state {q!r} unknown")
    tape = set(spec.tape_symbols)
    memory = set(spec.memory_alphabet)
    marks = set(model.marks) if model is not None else None
    for key, tr in spec.delta.items():
        q, ins, d = key
        if q not in states or d not in memory or len(ins) != spec.heads \
                or any(a not in tape for a in ins):
            problems.append(f"transition key {key!r} outside the alphabets")
            continue
        if tr.next not in states:
            problems.append(f"transition {key!r} targets unknown state {tr.next!r}")
        if len(tr.moves) != spec.heads or any(m not in (-1, 0, 1) for m in tr.moves):
            problems.append(f"transition {key!r} has bad head moves {tr.moves!r}")
        if marks is not None and tr.command is not None and tr.command not in marks:
            problems.append(f"transition {key!r}: mark {tr.command!r} not in G={sorted(marks)}")
    for key in spec.keys():
        if key not in spec.delta:
            problems.append(f"missing transition for {key!r}")
    if worm is not None:
        for q in worm.writing - states:
            problems.append(f"writing state {q!r} unknown")
        for q in worm.writing:
            if q not in worm.fill:
                problems.append(f"writing state {q!r} has no fill symbol")
        for q, d in worm.fill.items():
            if d not in memory:
                problems.append(f"fill symbol {d!r} of state {q!r} not in memory alphabet")
    return problems


def check_spec(spec, model: Optional[MemoryModel] = None) -> None:
    problems = validate_spec(spec, model)
    if problems:
        raise SpecError("; ".join(problems))


@dataclass(frozen=True)
class Configuration:
    state: Hashable
    heads: tuple
    cell: Hashable
    steps: int = 0


def marked_input(word: Sequence[str]) -> tuple:
    return (LEFT_END,) + tuple(word) + (RIGHT_END,)


def initial_configuration(spec: AutomatonSpec, model: MemoryModel) -> Configuration:
    return Configuration(spec.initial, (1,) * spec.heads, model.initial, 0)


def step(spec: AutomatonSpec, model: MemoryModel, content: MemoryContent,
         config: Configuration, tape: Sequence[str]) -> Optional[Configuration]:
    """Apply delta once.  Returns None if ``config`` is already accepting.

    ``tape`` is the marked input (see :func:`marked_input`).
    """
    if config.state in spec.accepting:
        return None
    ins = tuple(tape[p] for p in config.heads)
    tr = spec.delta[(config.state, ins, content.read(config.cell))]
    heads = tuple(p + m for p, m in zip(config.heads, tr.moves))
    if any(p < 0 or p >= len(tape) for p in heads):
        raise HeadFault(f"head left the marked input at step {config.steps}")
    return Configuration(tr.next, heads, model.neighbor(config.cell, tr.command),
                         config.steps + 1)


class Status(enum.Enum):
    ACCEPT = "accept"
    BUDGET = "budget"
    WORM_ERROR = "worm-error"
    HEAD_FAULT = "head-fault"


@dataclass(frozen=True)
class RunOutcome:
    status: Status
    steps: int
    error: Optional[str] = None  # "write-conflict" or "read-void" for WORM errors

    @property
    def accepted(self) -> bool:
        return self.status is Status.ACCEPT

    def __str__(self):
        label = {Status.ACCEPT: "ACCEPT", Status.BUDGET: "BUDGET_EXHAUSTED",
                 Status.WORM_ERROR: "WORM_ERROR", Status.HEAD_FAULT: "HEAD_FAULT"}[self.status]
        extra = f" error={self.error}" if self.error else ""
        return f"{label} steps={self.steps}{extra}"


@dataclass
class TraceSummary:
    visited_cells: int = 1
    return_moves: int = 0
    max_head: int = 1
    # distinct new cells entered between consecutive return moves
    fresh_between_returns: list = field(default_factory=lambda: [0])
    loop_detected: bool = False


class _Tracker:
    def __init__(self, model: MemoryModel):
        self.model = model
        self.seen = {model.initial}
        self.summary = TraceSummary()

    def moved(self, config: Configuration, command: Optional[str]):
        s = self.summary
        if command is not None and config.cell == self.model.initial:
            s.return_moves += 1
            s.fresh_between_returns.append(0)
        if config.cell not in self.seen:
            self.seen.add(config.cell)
            s.visited_cells += 1
            s.fresh_between_returns[-1] += 1
        s.max_head = max(s.max_head, max(config.heads))


def run(spec: AutomatonSpec, model: MemoryModel, content: MemoryContent,
        word: Sequence[str], budget: int, detect_loops: bool = True):
    """Run from the initial configuration for at most ``budget`` steps.

    With ``detect_loops`` a repeated configuration ends the run early: the
    machine is deterministic, so it can never accept and the outcome is
    reported as an exhausted budget with ``steps == budget``.
    """
    tape = marked_input(word)
    config = initial_configuration(spec, model)
    track = _Tracker(model)
    seen = set()
    while True:
        if config.state in spec.accepting:
            return RunOutcome(Status.ACCEPT, config.steps), track.summary
        if config.steps >= budget:
            return RunOutcome(Status.BUDGET, config.steps), track.summary
        if detect_loops:
            key = (config.state, config.heads, config.cell)
            if key in seen:
                track.summary.loop_detected = True
                return RunOutcome(Status.BUDGET, budget), track.summary
            seen.add(key)
        ins = tuple(tape[p] for p in config.heads)
        tr = spec.delta[(config.state, ins, content.read(config.cell))]
        heads = tuple(p + m for p, m in zip(config.heads, tr.moves))
        if any(p < 0 or p >= len(tape) for p in heads):
            return RunOutcome(Status.HEAD_FAULT, config.steps), track.summary
        config = Configuration(tr.next, heads, model.neighbor(config.cell, tr.command),
                               config.steps + 1)
        track.moved(config, tr.command)


def run_worm(worm: WormSpec, model: MemoryModel, word: Sequence[str], budget: int,
             detect_loops: bool = True):
    """Run a WORM automaton; returns ``(outcome, written, summary)``.

    In every configuration whose state is a writing state the fill symbol
    is applied to the current cell before delta: a void cell receives it,
    a cell already holding it is left alone, any other cell is a
    write-conflict.  Applying delta at a void cell is a read-void error.
    """
    spec = worm.automaton
    tape = marked_input(word)
    state, heads, cell, steps = spec.initial, (1,) * spec.heads, model.initial, 0
    written: dict = {}
    track = _Tracker(model)
    seen = set()
    while True:
        if state in spec.accepting:
            return RunOutcome(Status.ACCEPT, steps), written, track.summary
        if state in worm.writing:
            sym = worm.fill[state]
            have = written.get(cell)
            if have is None:
                written[cell] = sym
            elif have != sym:
                return RunOutcome(Status.WORM_ERROR, steps, "write-conflict"), written, track.summary
        if cell not in written:
            return RunOutcome(Status.WORM_ERROR, steps, "read-void"), written, track.summary
        if steps >= budget:
            return RunOutcome(Status.BUDGET, steps), written, track.summary
        if detect_loops:
            key = (state, heads, cell, len(written))
            if key in seen:
                track.summary.loop_detected = True
                return RunOutcome(Status.BUDGET, budget), written, track.summary
            seen.add(key)
        ins = tuple(tape[p] for p in heads)
        tr = spec.delta[(state, ins, written[cell])]
        heads = tuple(p + m for p, m in zip(heads, tr.moves))
        if any(p < 0 or p >= len(tape) for p in heads):
            return RunOutcome(Status.HEAD_FAULT, steps), written, track.summary
        state, cell, steps = tr.next, model.neighbor(cell, tr.command), steps + 1
        track.moved(Configuration(state, heads, cell, steps), tr.command)


def calibrated_budget(spec: AutomatonSpec, model: MemoryModel, n: int, window: int) -> int:
    """Step budget that certifies non-acceptance on window-supported contents.

    With ``S`` surface configurations, an accepting run never walks more
    than ``S`` cells past the support, and never repeats a configuration,
    so ``S`` times the number of reachable cells bounds its length.
    """
    s = spec.surface_count(n)
    if model.kind in ("W1", "W15", "PerversedW15"):
        return s * (window + s) + 1
    if model.kind == "W2":
        return s * (2 * window + 2 * s + 1) + 1
    raise ValueError(f"no calibrated budget for {model.kind}")
