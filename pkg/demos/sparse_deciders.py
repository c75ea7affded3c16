# Exact k-sparse acceptance compared with exhaustive guess search.
import random
import time

from guesstape import Sparse, build_model, calibrated_budget
from guesstape.deciders import (brute_force_accepts, sparse_accept_decider_w2,
                                sparse_accept_decider_w15)
from guesstape.samples import random_spec

rng = random.Random(7)
W15, W2 = build_model("W15"), build_model("W2")

agree = total = 0
t0 = time.perf_counter()
for _ in range(40):
    spec = random_spec(rng, 3)
    word = rng.choice(["", "a", "ab", "ba"])
    d = sparse_accept_decider_w15(spec, word, 1)
    budget = calibrated_budget(spec, W15, len(word), 48)
    b = brute_force_accepts(spec, W15, word, Sparse(1, "0"), 48, budget) is not None
    agree += d.accepted == b
    total += 1
print(f"1.5-way tape, k=1: {agree}/{total} agree ({time.perf_counter() - t0:.1f}s)")
print("last instance: threshold", d.threshold, "period", d.period, "candidates", d.candidates)

agree = total = 0
for _ in range(20):
    spec = random_spec(rng, 3)
    d = sparse_accept_decider_w2(spec, "a", 2)
    budget = calibrated_budget(spec, W2, 1, 12)
    b = brute_force_accepts(spec, W2, "a", Sparse(2, "0"), 12, budget) is not None
    agree += d.accepted == b
    total += 1
print(f"two-way tape, k=2: {agree}/{total} agree")
