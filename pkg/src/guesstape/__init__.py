"""Finite automata with guess memories on tapes and Cayley graphs.

The package simulates multi-head automata that read an existentially
quantified memory, decides acceptance over sparse guesses on the 1.5-way
and two-way tapes, and verifies Turing machine histories laid out on a
1.5-way guess.
"""

from .constructions import (DEAD, WalkingAutomaton, determinize_to_nondet,
                            perversed_tally_recognizer, run_walker, sparse_verifier_product,
                            surface_automaton, tally_omega, walker_to_spec)
from .machine import (AutomatonSpec, Configuration, HeadFault, RunOutcome, SpecError, Status,
                      TraceSummary, Transition, WormSpec, calibrated_budget, check_spec, run,
                      run_worm, step, validate_spec)
from .memory import (MINUS, PLUS, MemoryContent, MemoryModel, Sparse, UnknownMark, Unrestricted,
                     build_model, content_read, resolve_neighbor, route_cells)

__version__ = "0.1.0"
