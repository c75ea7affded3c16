# Walker behaviour on huge blocks of zeros, via Boolean matrix powers.
import random

from guesstape.deciders import ZeroBlockProcedure
from guesstape.samples import random_walker

rng = random.Random(13)
walker = random_walker(rng, 6)
f0 = ZeroBlockProcedure(walker)
print("walker states:", walker.states, "accepting:", sorted(walker.accepting))
print("zero map:", {s: walker.zero_map(s) for s in walker.states if s not in walker.accepting})
print("cycle lcm of the zero map:", f0.cycle_lcm())

# one query per start state; x far beyond anything steppable
x = 10 ** 18
for q in walker.states:
    print(f"{q} on 0^{x}: {f0(q, x)}")

# small x, stepped by hand for comparison
q = walker.start
for n in range(8):
    print(f"{q} on 0^{n}: {f0(q, n)}")
