"""Binary Turing machines, their configurations as integers, and history guesses.

A word ``w`` over {0,1} is coded by ``c(w) = int("1" + w, 2)``.  A
configuration with left part ``l``, scanned bit ``a`` and right part ``r``
becomes ``(c(l), q, a, c(reversed r))``, so both neighbours of the head
are the low bits of their codes and a move is a shift by one bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Optional, Sequence

from ..memory import MemoryContent

STAR = "*"
SEP = "#"
BLANK = "_"
BITS = ("0", "1")
RESERVED = (STAR, SEP, BLANK) + BITS


class TMError(ValueError):
    pass


class SpaceExceeded(TMError):
    pass


class BudgetExhausted(TMError):
    pass


def c_encode(word: str) -> int:
    if any(ch not in "01" for ch in word):
        raise ValueError(f"not a binary word: {word!r}")
    return int("1" + word, 2)


def c_decode(code: int) -> str:
    if code < 1:
        raise ValueError("codes start at 1")
    return bin(code)[3:]


@dataclass(frozen=True, eq=False)
class TMSpec:
    """Deterministic one-tape machine over {0,1}.

    ``delta[(q, a)] = (q2, b, move)`` with ``move`` in ``"LR"``.  A
    missing entry halts without accepting; final states have no moves.
    """

    states: tuple
    delta: Mapping
    initial: Hashable
    final: frozenset
    space: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "final", frozenset(self.final))
        problems = self.validate()
        if problems:
            raise TMError("; ".join(problems))

    def validate(self) -> list:
        problems = []
        states = set(self.states)
        for q in self.states:
            if not isinstance(q, str) or q in RESERVED:
                problems.append(f"state {q!r} must be a string other than {RESERVED}")
        if self.initial not in states:
            problems.append(f"initial state {self.initial!r} unknown")
        for q in self.final - states:
            problems.append(f"final state {q!r} unknown")
        for (q, a), (q2, b, move) in self.delta.items():
            if q not in states or a not in (0, 1):
                problems.append(f"bad transition key {(q, a)!r}")
            elif q in self.final:
                problems.append(f"final state {q!r} has a transition")
            if q2 not in states or b not in (0, 1) or move not in ("L", "R"):
                problems.append(f"bad transition {(q, a)!r} -> {(q2, b, move)!r}")
        return problems


@dataclass(frozen=True)
class TapeConfig:
    """Explicit configuration: ``tape`` holds 2s bits, ``head`` indexes it."""

    state: Hashable
    tape: tuple
    head: int


@dataclass(frozen=True)
class EncodedConfig:
    cl: int
    q: Hashable
    a: int
    cr: int


def initial_tape_config(tm: TMSpec, word: str, s: int) -> TapeConfig:
    if len(word) > s:
        raise SpaceExceeded(f"input of length {len(word)} exceeds space {s}")
    if s < 1:
        raise ValueError("space must be positive")
    right = [int(ch) for ch in word] + [0] * (s - len(word))
    return TapeConfig(tm.initial, tuple([0] * s + right), s)


def encode_config(cfg: TapeConfig) -> EncodedConfig:
    left = "".join(map(str, cfg.tape[:cfg.head]))
    right = "".join(map(str, cfg.tape[cfg.head + 1:]))
    return EncodedConfig(c_encode(left), cfg.state, cfg.tape[cfg.head], c_encode(right[::-1]))


def initial_encoded(word: str, s: int, initial) -> EncodedConfig:
    """Closed form of the encoded initial configuration."""
    tail = word[1:][::-1]
    return EncodedConfig(2 ** s, initial, int(word[0]) if word else 0,
                         2 ** (s - 1) + (int(tail, 2) if tail else 0))


def direct_step(tm: TMSpec, cfg: TapeConfig) -> TapeConfig:
    key = (cfg.state, cfg.tape[cfg.head])
    if key not in tm.delta:
        raise TMError(f"no move from {key!r}")
    q2, b, move = tm.delta[key]
    tape = list(cfg.tape)
    tape[cfg.head] = b
    head = cfg.head + (1 if move == "R" else -1)
    if not 0 <= head < len(tape):
        raise SpaceExceeded("head left the work space")
    return TapeConfig(q2, tuple(tape), head)


def encode_step(tm: TMSpec, cfg: EncodedConfig) -> EncodedConfig:
    key = (cfg.q, cfg.a)
    if key not in tm.delta:
        raise TMError(f"no move from {key!r}")
    q2, b, move = tm.delta[key]
    if move == "L":
        if cfg.cl < 2:
            raise SpaceExceeded("left move at the left end of the work space")
        return EncodedConfig(cfg.cl // 2, q2, cfg.cl % 2, b + 2 * cfg.cr)
    if cfg.cr < 2:
        raise SpaceExceeded("right move at the right end of the work space")
    return EncodedConfig(b + 2 * cfg.cl, q2, cfg.cr % 2, cfg.cr // 2)


@dataclass(frozen=True)
class HistoryGuess:
    """A run laid out as ``*^cl q a *^cr #`` blocks followed by one more ``#``."""

    configs: tuple
    tokens: tuple

    @classmethod
    def from_configs(cls, configs: Sequence[EncodedConfig]) -> "HistoryGuess":
        tokens = []
        for c in configs:
            tokens += [STAR] * c.cl + [c.q, str(c.a)] + [STAR] * c.cr + [SEP]
        tokens.append(SEP)
        return cls(tuple(configs), tuple(tokens))

    def content(self) -> MemoryContent:
        return MemoryContent(BLANK, dict(enumerate(self.tokens)))


def tm_history_guess(tm: TMSpec, word: str, s: int, budget: int = 10_000):
    """Run ``tm`` on ``word`` in space ``s``; returns ``(HistoryGuess, accepted)``."""
    cfg = encode_config(initial_tape_config(tm, word, s))
    configs = [cfg]
    while cfg.q not in tm.final and (cfg.q, cfg.a) in tm.delta:
        if len(configs) > budget:
            raise BudgetExhausted(f"no halt within {budget} steps")
        cfg = encode_step(tm, cfg)
        configs.append(cfg)
    return HistoryGuess.from_configs(configs), cfg.q in tm.final


def read_history_tokens(lines) -> list:
    """One token per line; blank lines are skipped."""
    return [line.strip() for line in lines if line.strip()]
