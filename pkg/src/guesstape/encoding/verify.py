"""Staged verification of a history guess, one modulus per stage.

Stage ``p`` scans the guess once, keeping every unary block length modulo
``p``, and checks the first block against the input and every adjacent
pair of blocks against the move table.  Passing every stage ``2..m``
pins the true block lengths modulo ``lcm(2..m)``, which determines them
when that exceeds every legal code.  Guesses with blocks that long are
outside this guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from ..memory import MemoryContent
from .tm import BITS, SEP, STAR, TMSpec
from .walker import LogSpaceWalker


def choose_m(s: int) -> int:
    """Smallest ``m`` with ``lcm(2..m) > 2**(2s+2)``."""
    target, m, acc = 2 ** (2 * s + 2), 2, 2
    while acc <= target:
        m += 1
        acc = lcm(acc, m)
    return m


@dataclass(frozen=True)
class StageReport:
    p: int
    ok: bool
    reason: str = ""
    blocks: int = 0

    def __str__(self):
        return f"p={self.p} ok" if self.ok else f"p={self.p} fail: {self.reason}"


@dataclass(frozen=True)
class HistoryVerdict:
    accepted: bool
    stages: tuple

    def __bool__(self):
        return self.accepted


def _first_residues(word: str, s: int, p: int, walker: LogSpaceWalker):
    """Residues of the initial left and right codes, from the input alone."""
    left = walker.counter(p, 1)
    for _ in range(s):
        left.double_plus(0)
    right = walker.counter(p, 1)
    padded = word[1:] + "0" * (s - len(word)) if word else "0" * (s - 1)
    for ch in reversed(padded):
        right.double_plus(int(ch))
    return left.value, right.value


def verify_stage(tm: TMSpec, word: str, s: int, p: int, guess: MemoryContent,
                 fast: bool = True) -> StageReport:
    w = LogSpaceWalker(guess, fast)
    l0, r0 = _first_residues(word, s, p, w)
    a0 = int(word[0]) if word else 0
    cur_l, cur_r = w.counter(p), w.counter(p)
    prev = None
    blocks = 0

    def fail(why):
        return StageReport(p, False, f"block {blocks}: {why}", blocks)

    w.reset()
    while True:
        cur_l.value = cur_r.value = 0
        if not w.skip_run(STAR, cur_l):
            return fail("empty or missing left block")
        q = w.read()
        if q not in tm.states:
            return fail(f"expected a state, read {q!r}")
        w.advance()
        a = w.read()
        if a not in BITS:
            return fail(f"expected a bit, read {a!r}")
        w.advance()
        a = int(a)
        if not w.skip_run(STAR, cur_r):
            return fail("empty or missing right block")
        if w.read() != SEP:
            return fail("missing separator")
        w.advance()
        cl, cr = cur_l.value, cur_r.value
        if prev is None:
            if q != tm.initial or a != a0 or cl != l0 or cr != r0:
                return fail("first block does not match the input")
        else:
            pl, pq, pa, pr = prev
            move = tm.delta.get((pq, pa))
            if move is None:
                return fail("previous block has no move")
            q2, b, direction = move
            if q != q2:
                return fail(f"state {q!r} does not follow from {pq!r}")
            if direction == "L":
                ok = pl == (2 * cl + a) % p and cr == (b + 2 * pr) % p
            else:
                ok = cl == (b + 2 * pl) % p and pr == (2 * cr + a) % p
            if not ok:
                return fail("codes break the move relation")
        blocks += 1
        last = w.read() == SEP
        if last:
            if q not in tm.final:
                return fail("last state is not final")
            if not w.discipline_ok():
                return fail("counter discipline violated")
            return StageReport(p, True, "", blocks)
        if q in tm.final:
            return fail("final state before the end")
        prev = (cl, q, a, cr)


def verify_history_crt(tm: TMSpec, word: str, s: int, m: int, guess: MemoryContent,
                       fast: bool = True) -> HistoryVerdict:
    if m < 2:
        raise ValueError("need m >= 2")
    stages = tuple(verify_stage(tm, word, s, p, guess, fast) for p in range(2, m + 1))
    return HistoryVerdict(all(r.ok for r in stages), stages)
