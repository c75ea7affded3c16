from .boolmat import BoolMatrix, bool_matrix_power
from .brute import (CAP_ENV, ResourceRefusal, brute_force_accepts, count_contents, default_cap,
                    enumerate_contents)
from .halting import HaltingRoute, bounded_halting_search, route_consistent
from .sparse2 import BlockOracle, Layout, SparseDecision2, evaluate_layout, sparse_accept_decider_w2
from .sparse15 import (SparseDecision, SparseGuessParams, SparseVerdict, gap_candidates,
                       run_on_sparse_guess, sparse_accept_decider_w15)
from .trajectory import HALTING, PERIODIC, SHIFT, Orbit, TrajectoryClass, classify_trajectory, zero_orbit
from .zeroblock import ZeroBlockOutcome, ZeroBlockProcedure, f0_zero_block

