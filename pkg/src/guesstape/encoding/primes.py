"""Primes by trial division, CRT, and indexed access to a one-symbol guess."""

from __future__ import annotations

from math import gcd, isqrt, prod
from typing import Iterator, Optional, Sequence

from ..memory import MemoryContent
from .walker import LogSpaceWalker


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def iter_primes() -> Iterator[int]:
    """All primes in order, keeping only the current candidate."""
    yield 2
    n = 3
    while True:
        if is_prime(n):
            yield n
        n += 2


def kth_prime(k: int) -> int:
    if k < 1:
        raise ValueError("k starts at 1")
    for i, p in enumerate(iter_primes(), 1):
        if i == k:
            return p


def crt_combine(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Smallest ``N >= 0`` with ``N % moduli[i] == residues[i]`` for all i."""
    if len(residues) != len(moduli):
        raise ValueError("need one residue per modulus")
    if len(set(moduli)) != len(moduli):
        raise ValueError("moduli must be distinct")
    n, m = 0, 1
    for b, p in zip(residues, moduli):
        if p < 2 or not 0 <= b < p:
            raise ValueError(f"residue {b} out of range for modulus {p}")
        if gcd(m, p) != 1:
            raise ValueError(f"modulus {p} shares a factor with the others")
        # n + m*t = b (mod p)
        t = (b - n) * pow(m, -1, p) % p
        n, m = n + m * t, m * p
    return n


def fetch_guess(n: int, zero: str = "0", mark: str = "1") -> MemoryContent:
    """The one-symbol guess whose mark sits at 1-indexed position ``n``."""
    if n < 1:
        raise ValueError("position starts at 1")
    return MemoryContent(zero, {n - 1: mark})


def placement(residues: Sequence[int], primes: Sequence[int]) -> int:
    """Positive position carrying ``residues``: the CRT value, or its period if that is 0."""
    n = crt_combine(residues, primes)
    return n if n else prod(primes)


def indexed_guess_fetch(guess: MemoryContent, i: int, bound: int,
                        walk_limit: Optional[int] = None) -> Optional[int]:
    """Residue modulo the ``i``-th prime of the mark's 1-indexed position.

    Returns None (reject) if the residue is not below ``bound`` or no mark
    is found within ``walk_limit`` cells.
    """
    p = kth_prime(i)
    if not guess.support:
        return None
    walker = LogSpaceWalker(guess)
    count = walker.counter(p)
    walker.reset()
    skipped = walker.skip_run(guess.default, count, walk_limit)
    if skipped is None:
        return None
    count.add(1)  # the marked cell itself
    return count.value if count.value < bound else None
