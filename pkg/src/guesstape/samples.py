"""Random and hand-written instances for tests, demos and experiments."""

from __future__ import annotations

import itertools
import random
from typing import Optional, Sequence

from .constructions import WalkingAutomaton
from .encoding.tm import TMSpec
from .machine import LEFT_END, RIGHT_END, AutomatonSpec, Transition, WormSpec


def random_spec(rng: random.Random, n_states: int = 3, heads: int = 1,
                sigma: Sequence[str] = ("a", "b"), gamma: Sequence[str] = ("0", "1"),
                marks: Sequence[str] = ("+", "-"), stay_prob: float = 0.25,
                accept_prob: float = 0.15) -> AutomatonSpec:
    """A total deterministic spec whose last state is accepting.

    Each transition enters the accepting state with probability ``accept_prob``.
    """
    states = tuple(f"q{i}" for i in range(n_states))
    accepting = {states[-1]}
    tape = (LEFT_END,) + tuple(sigma) + (RIGHT_END,)
    delta = {}
    for q in states[:-1]:
        for ins in itertools.product(tape, repeat=heads):
            for d in gamma:
                moves = []
                for a in ins:
                    options = [0]
                    if a != LEFT_END:
                        options.append(-1)
                    if a != RIGHT_END:
                        options.append(1)
                    moves.append(rng.choice(options))
                cmd = None if rng.random() < stay_prob else rng.choice(sorted(marks))
                nxt = states[-1] if rng.random() < accept_prob else rng.choice(states[:-1])
                delta[(q, ins, d)] = Transition(nxt, tuple(moves), cmd)
    return AutomatonSpec(states, heads, tuple(sigma), tuple(gamma), gamma[0], delta,
                         states[0], frozenset(accepting))


def random_words(sigma: Sequence[str], max_len: int):
    for n in range(max_len + 1):
        for w in itertools.product(sigma, repeat=n):
            yield "".join(w)


def random_walker(rng: random.Random, n_states: int = 6, symbols: Sequence[str] = ("0", "1"),
                  marks: Sequence[str] = ("+", "-"), n_accepting: Optional[int] = None
                  ) -> WalkingAutomaton:
    states = tuple(f"s{i}" for i in range(n_states))
    if n_accepting is None:
        n_accepting = rng.randint(0, max(1, n_states // 3))
    accepting = frozenset(rng.sample(states[1:], min(n_accepting, n_states - 1)))
    delta, moves = {}, {}
    for s in states:
        if s in accepting:
            continue
        for d in symbols:
            t = rng.choice(states)
            delta[(s, d)] = t
            if t in accepting and rng.random() < 0.3:
                moves[(s, d)] = None
            else:
                moves[(s, d)] = rng.choice(sorted(marks))
    return WalkingAutomaton(states, tuple(symbols), symbols[0], tuple(marks), delta, moves,
                            accepting, states[0])


def random_worm(rng: random.Random, n_states: int = 3, sigma: Sequence[str] = ("a",),
                gamma: Sequence[str] = ("0", "1"), marks: Sequence[str] = ("+", "-")) -> WormSpec:
    """A WORM spec in normal form: it starts in a writing state and every move
    of the memory head lands in a writing state, so no void cell is read."""
    states = tuple(f"q{i}" for i in range(n_states))
    accepting = {states[-1]}
    writing = {states[0]} | {q for q in states[1:-1] if rng.random() < 0.6}
    fill = {q: rng.choice(sorted(gamma)) for q in states if q in writing}
    tape = (LEFT_END,) + tuple(sigma) + (RIGHT_END,)
    targets_moving = sorted(writing | accepting)
    delta = {}
    for q in states[:-1]:
        for a in tape:
            for d in gamma:
                options = [0] + ([-1] if a != LEFT_END else []) + ([1] if a != RIGHT_END else [])
                move = rng.choice(options)
                if rng.random() < 0.5:
                    cmd, nxt = rng.choice(sorted(marks)), rng.choice(targets_moving)
                else:
                    cmd, nxt = None, rng.choice(states)
                delta[(q, (a,), d)] = Transition(nxt, (move,), cmd)
    spec = AutomatonSpec(states, 1, tuple(sigma), tuple(gamma), gamma[0], delta, states[0],
                         frozenset(accepting))
    return WormSpec(spec, frozenset(writing), fill)


def _tm(states, rows, initial, final):
    delta = {(q, a): (q2, b, m) for q, a, q2, b, m in rows}
    return TMSpec(tuple(states), delta, initial, frozenset(final))


# Each runs at least two steps on every input, so histories have three or more blocks.
HAND_TMS = {
    # flips the first bit, steps right and back; accepts iff that bit was 0
    "flip-check": _tm("ABCF", [
        ("A", 0, "B", 1, "R"), ("A", 1, "B", 0, "R"),
        ("B", 0, "C", 0, "L"), ("B", 1, "C", 1, "L"),
        ("C", 1, "F", 1, "R"),
    ], "A", "F"),
    # accepts iff the third bit is 1
    "third-bit": _tm("ABCF", [
        ("A", 0, "B", 0, "R"), ("A", 1, "B", 1, "R"),
        ("B", 0, "C", 0, "R"), ("B", 1, "C", 1, "R"),
        ("C", 1, "F", 1, "L"),
    ], "A", "F"),
    # adds one to the number written least significant bit first
    "increment": _tm("ABF", [
        ("A", 1, "A", 0, "R"), ("A", 0, "B", 1, "L"),
        ("B", 0, "F", 0, "L"),
    ], "A", "F"),
    # walks right over 1s; accepts iff it then finds two 0s in a row
    "double-zero": _tm("ABCF", [
        ("A", 1, "A", 1, "R"), ("A", 0, "B", 0, "R"),
        ("B", 0, "C", 0, "L"), ("B", 1, "A", 1, "R"),
        ("C", 0, "F", 1, "L"),
    ], "A", "F"),
}
