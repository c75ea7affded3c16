"""Automaton-to-automaton constructions.

* :func:`determinize_to_nondet` turns a WORM automaton into an automaton
  over a read-only guess that accepts exactly on the contents the WORM
  automaton would have written.
* :func:`surface_automaton` fixes the input word and compresses the
  non-moving steps away, leaving a :class:`WalkingAutomaton` whose states
  are surface configurations ``(state, head positions)``.
* :func:`sparse_verifier_product` runs a spec in parallel with a counter
  that rejects once more than ``k`` non-zero cells have been read.
* :func:`perversed_tally_recognizer` decides a tally language from the
  edge marking of a perversed 1.5-way tape.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Mapping, Optional

from .machine import (LEFT_END, RIGHT_END, AutomatonSpec, RunOutcome, Status,
                      Transition, WormSpec, marked_input)
from .memory import MINUS, PLUS, MemoryContent, MemoryModel, build_model

DEAD = "DEAD"


@dataclass(frozen=True, eq=False)
class WalkingAutomaton:
    """A memory-walking automaton: one memory move per step, no input.

    ``delta[(s, d)]`` is the next state after reading ``d`` in state
    ``s`` and ``moves[(s, d)]`` the mark followed.  A move of ``None``
    (stay) is only allowed into an accepting state.  Accepting states and
    the ``dead`` sink are absorbing; the sink keeps following
    ``marks[0]``.
    """

    states: tuple
    symbols: tuple
    zero: str
    marks: tuple
    delta: Mapping
    moves: Mapping
    accepting: frozenset
    start: Hashable
    dead: Optional[Hashable] = None

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "states", tuple(self.states))

    def __len__(self):
        return len(self.states)

    def is_terminal(self, s) -> bool:
        return s in self.accepting or s == self.dead

    def zero_map(self, s):
        return self.delta[(s, self.zero)], self.moves[(s, self.zero)]

    def validate(self) -> list:
        problems = []
        states = set(self.states)
        if self.start not in states:
            problems.append(f"start {self.start!r} unknown")
        if self.zero not in self.symbols:
            problems.append("zero symbol not in alphabet")
        for s in self.states:
            if s in self.accepting:
                continue
            for d in self.symbols:
                if (s, d) not in self.delta:
                    problems.append(f"missing transition ({s!r}, {d!r})")
                    continue
                t, m = self.delta[(s, d)], self.moves[(s, d)]
                if t not in states:
                    problems.append(f"({s!r}, {d!r}) targets unknown {t!r}")
                if m is None and t not in self.accepting:
                    problems.append(f"({s!r}, {d!r}) stays outside an accepting state")
                elif m is not None and m not in self.marks:
                    problems.append(f"({s!r}, {d!r}) uses unknown mark {m!r}")
        return problems


def run_walker(walker: WalkingAutomaton, model: MemoryModel, content: MemoryContent,
               budget: int):
    """Direct step-by-step run.  Returns ``(outcome, return_moves)``."""
    s, cell, returns = walker.start, model.initial, 0
    for t in range(budget + 1):
        if s in walker.accepting:
            return RunOutcome(Status.ACCEPT, t), returns
        if s == walker.dead or t == budget:
            break
        d = content.read(cell)
        mark = walker.moves[(s, d)]
        s, cell = walker.delta[(s, d)], model.neighbor(cell, mark)
        if mark is not None and cell == model.initial:
            returns += 1
    return RunOutcome(Status.BUDGET, budget), returns


def _trim(states, delta, moves, accepting, start, marks):
    """Send every state that cannot reach acceptance to the dead sink."""
    preds = {s: set() for s in states}
    for (s, _), t in delta.items():
        preds[t].add(s)
    alive = set(accepting)
    todo = list(accepting)
    while todo:
        t = todo.pop()
        for s in preds[t]:
            if s not in alive:
                alive.add(s)
                todo.append(s)
    if start not in alive:
        start = DEAD
    new_delta, new_moves = {}, {}
    for (s, d), t in delta.items():
        if s not in alive:
            continue
        if t in alive:
            new_delta[(s, d)], new_moves[(s, d)] = t, moves[(s, d)]
        else:
            new_delta[(s, d)], new_moves[(s, d)] = DEAD, marks[0]
    # keep only what the start reaches
    succ = {}
    for (s, _), t in new_delta.items():
        succ.setdefault(s, set()).add(t)
    reach, todo = {start, DEAD}, [start]
    while todo:
        for t in succ.get(todo.pop(), ()):
            if t not in reach:
                reach.add(t)
                todo.append(t)
    new_delta = {k: v for k, v in new_delta.items() if k[0] in reach}
    new_moves = {k: v for k, v in new_moves.items() if k[0] in reach}
    return reach, new_delta, new_moves, start


def surface_automaton(spec: AutomatonSpec, model: MemoryModel, word,
                      trim: bool = True) -> WalkingAutomaton:
    """Compress ``spec`` running on ``word`` into a walking automaton.

    From a surface configuration reading memory symbol ``d`` the spec is
    followed through its non-moving steps until it issues a memory move
    (the walker makes that move), enters an accepting state, faults a
    head, or repeats a surface configuration (both of the last two map to
    the dead sink).
    """
    tape = marked_input(word)
    accepting_q = spec.accepting
    marks = model.marks

    def fast_forward(q, heads, d):
        seen = set()
        while True:
            if q in accepting_q:
                return (q, heads), None
            if (q, heads) in seen:
                return DEAD, marks[0]
            seen.add((q, heads))
            tr = spec.delta[(q, tuple(tape[p] for p in heads), d)]
            nheads = tuple(p + m for p, m in zip(heads, tr.moves))
            if any(p < 0 or p >= len(tape) for p in nheads):
                return DEAD, marks[0]
            if tr.command is not None:
                return (tr.next, nheads), tr.command
            q, heads = tr.next, nheads

    start = (spec.initial, (1,) * spec.heads)
    delta, moves = {}, {}
    states, accepting = {start, DEAD}, set()
    queue = deque([start])
    while queue:
        s = queue.popleft()
        if s[0] in accepting_q:
            accepting.add(s)
            continue
        for d in spec.memory_alphabet:
            t, m = fast_forward(s[0], s[1], d)
            delta[(s, d)], moves[(s, d)] = t, m
            if t not in states:
                states.add(t)
                queue.append(t)
    for d in spec.memory_alphabet:
        delta[(DEAD, d)], moves[(DEAD, d)] = DEAD, marks[0]
    if trim:
        states, delta, moves, start = _trim(states, delta, moves, accepting, start, marks)
        for d in spec.memory_alphabet:
            delta[(DEAD, d)], moves[(DEAD, d)] = DEAD, marks[0]
        accepting &= states
    ordered = sorted(states, key=lambda s: (s == DEAD, repr(s)))
    ordered.remove(start)
    ordered.insert(0, start)
    return WalkingAutomaton(tuple(ordered), tuple(spec.memory_alphabet), spec.zero,
                            marks, delta, moves, frozenset(accepting), start, DEAD)


def walker_to_spec(walker: WalkingAutomaton) -> AutomatonSpec:
    """Wrap a walker as a 1-head spec that ignores its (empty) input."""
    delta = {}
    for s in walker.states:
        if s in walker.accepting:
            continue
        for end in (LEFT_END, RIGHT_END):
            for d in walker.symbols:
                delta[(s, (end,), d)] = Transition(walker.delta[(s, d)], (0,),
                                                   walker.moves[(s, d)])
    return AutomatonSpec(walker.states, 1, (), walker.symbols, walker.zero, delta,
                         walker.start, walker.accepting)


def _fresh(name, taken):
    while name in taken:
        name += "'"
    return name


def determinize_to_nondet(worm: WormSpec) -> AutomatonSpec:
    """Read-only-guess automaton equivalent to a WORM automaton.

    A writing state compares the guessed symbol with its fill symbol and
    moves to an absorbing rejecting state on mismatch.
    """
    spec = worm.automaton
    reject = _fresh("reject", set(spec.states))
    states = spec.states + (reject,)
    delta = {}
    still = (0,) * spec.heads
    for q, ins, d in spec.keys():
        if q in worm.writing and d != worm.fill[q]:
            delta[(q, ins, d)] = Transition(reject, still, None)
        else:
            delta[(q, ins, d)] = spec.delta[(q, ins, d)]
    for ins in itertools.product(spec.tape_symbols, repeat=spec.heads):
        for d in spec.memory_alphabet:
            delta[(reject, ins, d)] = Transition(reject, still, None)
    return AutomatonSpec(states, spec.heads, spec.input_alphabet, spec.memory_alphabet,
                         spec.zero, delta, spec.initial, spec.accepting)


def sparse_verifier_product(spec: AutomatonSpec, k: int, tape_kind: str = "W15") -> AutomatonSpec:
    """Run ``spec`` alongside a counter rejecting guesses with > k non-zero cells read.

    Product states are pairs ``(q, v)``.  On the 1.5-way tape ``v`` in
    ``0..k`` counts the non-zero cells passed since the last return move
    and ``v == k+1`` is absorbing rejection; reading a further non-zero
    cell when ``v == k`` rejects.  On the 2-way tape ``v`` is
    ``(left, right, here)``: the visited non-zero cells on each side of the
    head, and what is known about the current cell.  The visited region is
    an interval around the head, so a non-zero cell entered from the left
    is an old one exactly when ``right > 0``.
    """
    if tape_kind == "W15":
        return _product_w15(spec, k)
    if tape_kind == "W2":
        return _product_w2(spec, k)
    raise ValueError(f"verifier product needs W15 or W2, got {tape_kind!r}")


def _product_w15(spec, k):
    zero = spec.zero
    still = (0,) * spec.heads
    states = tuple((q, v) for v in range(k + 2) for q in spec.states)
    delta = {}
    for (q, v) in states:
        if q in spec.accepting and v <= k:
            continue
        for ins in itertools.product(spec.tape_symbols, repeat=spec.heads):
            for d in spec.memory_alphabet:
                if v == k + 1 or (d != zero and v == k) or q in spec.accepting:
                    delta[((q, v), ins, d)] = Transition((q, k + 1), still, None)
                    continue
                tr = spec.delta[(q, ins, d)]
                nv = v
                if tr.command == PLUS and d != zero:
                    nv = v + 1
                elif tr.command == MINUS:
                    nv = 0
                delta[((q, v), ins, d)] = Transition((tr.next, nv), tr.moves, tr.command)
    accepting = {(q, v) for q in spec.accepting for v in range(k + 1)}
    return AutomatonSpec(states, spec.heads, spec.input_alphabet, spec.memory_alphabet,
                         zero, delta, (spec.initial, 0), accepting)


REJECTED = "X"


def _v2_step(v, d, command, zero, k):
    left, right, here = v
    if here in ("start", "from-left", "from-right"):
        if d == zero:
            here = 0
        elif here == "from-left" and right > 0:
            right, here = right - 1, 1
        elif here == "from-right" and left > 0:
            left, here = left - 1, 1
        elif left + right + 1 > k:
            return REJECTED
        else:
            here = 1
    if command == PLUS:
        left += here == 1
        here = "from-left"
    elif command == MINUS:
        right += here == 1
        here = "from-right"
    return (left, right, here)


def _product_w2(spec, k):
    zero = spec.zero
    still = (0,) * spec.heads
    start = (spec.initial, (0, 0, "start"))
    states, delta = {start}, {}
    queue = deque([start])
    while queue:
        q, v = s = queue.popleft()
        if q in spec.accepting and v != REJECTED:
            continue
        for ins in itertools.product(spec.tape_symbols, repeat=spec.heads):
            for d in spec.memory_alphabet:
                if v == REJECTED or q in spec.accepting:
                    tr2 = Transition((q, REJECTED), still, None)
                else:
                    tr = spec.delta[(q, ins, d)]
                    nv = _v2_step(v, d, tr.command, zero, k)
                    if nv == REJECTED:
                        tr2 = Transition((q, REJECTED), still, None)
                    else:
                        tr2 = Transition((tr.next, nv), tr.moves, tr.command)
                delta[(s, ins, d)] = tr2
                if tr2.next not in states:
                    states.add(tr2.next)
                    queue.append(tr2.next)
    accepting = {s for s in states if s[0] in spec.accepting and s[1] != REJECTED}
    ordered = sorted(states, key=repr)
    return AutomatonSpec(tuple(ordered), spec.heads, spec.input_alphabet,
                         spec.memory_alphabet, zero, delta, start, accepting)


# --- perversed 1.5-way tape -------------------------------------------------

PERVERSED_SYMBOLS = ("0", "P", "M", "P*", "M*")


def _hint(d):
    return PLUS if d[0] == "P" else MINUS


def _opposite(d):
    return MINUS if d[0] == "P" else PLUS


@dataclass(frozen=True)
class TallyRecognizer:
    spec: AutomatonSpec
    model: MemoryModel
    guess: Callable[[int], MemoryContent]


def tally_omega(members, length: int) -> str:
    """Marking word for a tally language: odd positions 1, position 2n says 1^n in L.

    ``members`` is a predicate on ``n``; positions are 1-indexed in the
    convention but the returned string is indexed from 0.
    """
    bits = []
    for i in range(1, length + 1):
        bits.append("1" if i % 2 == 1 or members(i // 2) else "0")
    return "".join(bits)


def perversed_tally_recognizer(omega: str, default: int = 1) -> TallyRecognizer:
    """Recognizer of ``{1^n : bit 2n-1 (0-indexed) of omega is 1}``.

    The expected guess holds, in every cell, which mark leads right
    (``P`` for '+', ``M`` for '-'), with a ``*`` root flag on cell 0.
    The automaton first walks 2n cells right following the hints and
    takes the return edge, rejecting unless the root flag is seen at cell
    0 and at no other step.  It then walks 2n-1 cells following the hints
    and issues a literal '+': it accepts iff that edge does not lead back
    to the root.
    """
    model = build_model("PerversedW15", omega=omega, default=default)
    syms = PERVERSED_SYMBOLS
    hints = ("P", "M")
    roots = ("P*", "M*")
    names = ("S", "B", "A", "R", "L", "P2A", "P2B", "P2C", "CHK", "ACC", "REJ")
    tape_syms = (LEFT_END, "1", RIGHT_END)
    delta = {}
    for q in names:
        if q == "ACC":
            continue
        for a in tape_syms:
            for d in syms:
                delta[(q, (a,), d)] = Transition("REJ", (0,), None)

    def put(q, a, d, nxt, move, cmd):
        delta[(q, (a,), d)] = Transition(nxt, (move,), cmd)

    for d in roots:
        put("S", "1", d, "B", 0, _hint(d))
        put("R", "1", d, "L", -1, None)
        put("CHK", RIGHT_END, d, "REJ", 0, None)
    for d in hints:
        put("B", "1", d, "A", 1, _hint(d))
        put("A", "1", d, "B", 0, _hint(d))
        put("A", RIGHT_END, d, "R", -1, _opposite(d))
        put("CHK", RIGHT_END, d, "ACC", 0, None)
    for d in syms:
        put("L", "1", d, "L", -1, None)
        put("L", LEFT_END, d, "P2A", 1, None)
        put("P2B", "1", d, "P2C", 1, None)
        if d != "0":
            put("P2A", "1", d, "P2B", 0, _hint(d))
            put("P2C", "1", d, "P2A", 0, _hint(d))
            put("P2C", RIGHT_END, d, "CHK", 0, PLUS)
    spec = AutomatonSpec(names, 1, ("1",), syms, "0", delta, "S", {"ACC"})

    def guess(n: int) -> MemoryContent:
        cells = {v: ("P" if model.omega_bit(v) else "M") for v in range(2 * n + 1)}
        cells[0] += "*"
        return MemoryContent("0", cells)

    return TallyRecognizer(spec, model, guess)
