import random
from math import lcm

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from builders import build
from guesstape.constructions import DEAD, WalkingAutomaton, run_walker, walker_to_spec
from guesstape.deciders import (BoolMatrix, ResourceRefusal, ZeroBlockProcedure,
                                bool_matrix_power, bounded_halting_search, brute_force_accepts,
                                classify_trajectory, count_contents, enumerate_contents,
                                f0_zero_block, run_on_sparse_guess,
                                sparse_accept_decider_w2, sparse_accept_decider_w15)
from guesstape.deciders.halting import route_consistent
from guesstape.deciders.sparse15 import SparseGuessParams, gap_candidates
from guesstape.deciders.sparse2 import BlockOracle, Layout, evaluate_layout
from guesstape.deciders.trajectory import HALTING, PERIODIC, SHIFT
from guesstape.machine import calibrated_budget, run
from guesstape.memory import MemoryContent, Sparse, Unrestricted, build_model
from guesstape.samples import random_spec, random_walker

W15 = build_model("W15")
W2 = build_model("W2")


def walker(table, accepting=(), start="s0", symbols=("0", "a"), marks=("+", "-")):
    """``table[(s, d)] = (t, mark)``; states missing from the table get DEAD rows."""
    states = sorted({s for s, _ in table} | {t for t, _ in table.values()} | set(accepting)
                    | {start, DEAD}, key=lambda s: (s != start, s))
    delta, moves = {}, {}
    for s in states:
        if s in accepting:
            continue
        for d in symbols:
            t, m = table.get((s, d), (DEAD, marks[0]))
            delta[(s, d)], moves[(s, d)] = t, m
    return WalkingAutomaton(tuple(states), symbols, symbols[0], marks, delta, moves,
                            frozenset(accepting), start, DEAD)


# --- brute force ---------------------------------------------------------

def test_brute_accepting_start_gives_empty_witness():
    model, spec = build(["acc"], [], initial="acc")
    assert brute_force_accepts(spec, model, "", Unrestricted(), 3, 10) == MemoryContent("0")


def test_brute_finds_the_one_cell_witness():
    model, spec = build(["q", "spin", "acc"], [
        ("q", "*", "a", "acc", [0], None),
        ("q", "*", "0", "spin", [0], None),
        ("spin", "*", "*", "spin", [0], None),
    ])
    assert brute_force_accepts(spec, model, "", Unrestricted(), 4, 50) == MemoryContent("0", {0: "a"})


def test_brute_never_accepting():
    model, spec = build(["q", "acc"], [("q", "*", "*", "q", [0], "+")])
    assert brute_force_accepts(spec, model, "a", Unrestricted(), 5, 50) is None


def test_brute_refuses_beyond_cap():
    model, spec = build(["q", "acc"], [("q", "*", "*", "q", [0], "+")])
    with pytest.raises(ResourceRefusal):
        brute_force_accepts(spec, model, "", Unrestricted(), 30, 50, cap=1000)
    with pytest.raises(ValueError):
        brute_force_accepts(spec, model, "", Unrestricted(), 0, 50)


def test_enumeration_order_and_count():
    got = [dict(c.support) for c in enumerate_contents([0, 1], ["0", "a"], Unrestricted())]
    assert got == [{}, {1: "a"}, {0: "a"}, {0: "a", 1: "a"}]
    sparse = list(enumerate_contents(list(range(6)), ["0", "a", "b"], Sparse(2, "0")))
    assert len(sparse) == len(set(sparse)) == count_contents(6, 3, Sparse(2, "0"))
    assert all(c.nonzero_count() <= 2 for c in sparse)


# --- Boolean powers ------------------------------------------------------

def test_identity_power():
    i = BoolMatrix.identity(4)
    assert bool_matrix_power(i, 17) == i
    assert bool_matrix_power(BoolMatrix.from_map(3, [1, 2, 0]), 0) == BoolMatrix.identity(3)


def test_three_cycle_cubed():
    c = BoolMatrix.from_map(3, [1, 2, 0])
    assert bool_matrix_power(c, 3) == BoolMatrix.identity(3)
    assert bool_matrix_power(c, 2) != BoolMatrix.identity(3)


def test_huge_power_of_a_functional_matrix():
    rng = random.Random(40)
    for _ in range(20):
        n = rng.randint(1, 9)
        f = [rng.randrange(n) for _ in range(n)]
        m = BoolMatrix.from_map(n, f)
        big = bool_matrix_power(m, 2 ** 40)
        for i in range(n):
            transient, period = oracles.orbit_split(dict(enumerate(f)), i)
            x = transient + (2 ** 40 - transient) % period
            assert big.row_set(i) == [oracles.iterate(dict(enumerate(f)), i, x)[-1]]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.lists(st.booleans(), min_size=n, max_size=n), min_size=n, max_size=n))),
    st.integers(0, 12))
def test_power_matches_numpy(nm, e):
    n, rows = nm
    a = np.array(rows, dtype=bool)
    expected = np.eye(n, dtype=bool)
    for _ in range(e):
        expected = (expected.astype(int) @ a.astype(int)) > 0
    assert (bool_matrix_power(BoolMatrix.from_array(a), e).to_array() == expected).all()


def test_boolean_product_is_associative():
    rng = np.random.default_rng(3)
    for _ in range(30):
        a, b, c = (BoolMatrix.from_array(rng.random((5, 5)) < 0.3) for _ in range(3))
        assert (a @ b) @ c == a @ (b @ c)


def test_negative_exponent():
    with pytest.raises(ValueError):
        bool_matrix_power(BoolMatrix.identity(2), -1)


# --- zero blocks ---------------------------------------------------------

def test_f0_one_state_drifting_right():
    w = walker({("s0", "0"): ("s0", "+"), ("s0", "a"): ("s0", "+")})
    for x in (0, 1, 7, 10 ** 30):
        out = f0_zero_block(w, "s0", x)
        assert out.kind == "pass" and out.state == "s0"


def test_f0_chain():
    w = walker({("s0", "0"): ("s1", "+"), ("s1", "0"): ("acc", None)}, accepting={"acc"})
    out = f0_zero_block(w, "s0", 1)
    assert (out.kind, out.state) == ("pass", "s1")
    out = f0_zero_block(w, "s0", 2)
    assert out.kind == "accept" and str(out) == "ACCEPT_WITHIN at=2"


def test_f0_return_records_the_state_after_the_minus_edge():
    w = walker({("s0", "0"): ("s1", "+"), ("s1", "0"): ("s2", "-")})
    out = f0_zero_block(w, "s0", 5)
    assert (out.kind, out.state, out.at) == ("return", "s2", 2)
    assert f0_zero_block(w, "s0", 1).kind == "pass"


def test_f0_far_block_on_five_state_walkers():
    rng = random.Random(55)
    for _ in range(60):
        w = random_walker(rng, 5)
        f0 = ZeroBlockProcedure(w)
        for q in w.states:
            out = f0(q, 10 ** 18)
            assert (out.kind, out.state, out.at) == oracles.zero_block_reduced(w, q, 10 ** 18)


def test_f0_power_entries_follow_absorbing_semantics():
    rng = random.Random(56)
    for _ in range(30):
        w = random_walker(rng, 4)
        f0 = ZeroBlockProcedure(w)
        f = oracles.augmented_map(w)
        nodes = [("run", s) for s in w.states] + [("ret", s) for s in w.states]
        for n in range(0, 20):
            p = f0.power(n)
            for i, node in enumerate(nodes):
                target = oracles.iterate(f, node, n)[-1]
                assert p.row_set(i) == [nodes.index(target)]


def test_cycle_lcm_divides_lcm_of_sizes():
    rng = random.Random(57)
    for _ in range(50):
        w = random_walker(rng, rng.randint(1, 7))
        f0 = ZeroBlockProcedure(w)
        assert lcm(*range(1, len(w) + 1)) % f0.cycle_lcm() == 0


# --- sparse guesses on the 1.5-way tape ----------------------------------

def test_sparse_guess_params_round_trip():
    p = SparseGuessParams((3, 0, 2), ("a", "b", "a"))
    c = p.content("0")
    assert dict(c.support) == {3: "a", 4: "b", 7: "a"}
    assert SparseGuessParams.from_content(c) == p
    with pytest.raises(ValueError):
        SparseGuessParams((1,), ("a", "b"))


def test_sparse_run_accepting_start():
    w = walker({}, accepting={"s0"})
    assert run_on_sparse_guess(w, SparseGuessParams((5,), ("a",)))


def test_sparse_run_accepts_at_a_far_symbol():
    w = walker({("s0", "0"): ("s0", "+"), ("s0", "a"): ("acc", None)}, accepting={"acc"})
    assert run_on_sparse_guess(w, SparseGuessParams((10 ** 12,), ("a",)))
    assert not run_on_sparse_guess(w, SparseGuessParams((), ()))


def test_sparse_run_matches_direct_runs():
    rng = random.Random(58)
    for _ in range(150):
        w = random_walker(rng, rng.randint(2, 5), symbols=("0", "1", "2"))
        gaps = tuple(rng.randrange(6) for _ in range(rng.randint(0, 2)))
        syms = tuple(rng.choice("12") for _ in gaps)
        params = SparseGuessParams(gaps, syms)
        verdict = run_on_sparse_guess(w, params)
        direct = oracles.walker_run(w, W15, params.content("0"), 4000, count_final=False)
        assert verdict.accepted == direct[0]
        if verdict.accepted:
            assert verdict.returns == direct[1]
            assert verdict.returns <= len(w)


def test_gaps_beyond_threshold_matter_mod_period():
    rng = random.Random(59)
    for _ in range(100):
        w = random_walker(rng, rng.randint(2, 5))
        f0 = ZeroBlockProcedure(w)
        threshold, period = gap_candidates(f0, "lcm")
        x = threshold + 1 + rng.randrange(10)
        a = run_on_sparse_guess(w, SparseGuessParams((x,), ("1",)), f0).accepted
        b = run_on_sparse_guess(w, SparseGuessParams((x + period,), ("1",)), f0).accepted
        assert a == b


def test_w15_decider_all_zero_guess():
    model, spec = build(["q", "spin", "acc"], [
        ("q", "*", "0", "acc", [0], None),
        ("q", "*", "a", "spin", [0], None),
        ("spin", "*", "*", "spin", [0], None),
    ])
    d = sparse_accept_decider_w15(spec, "", 1)
    assert d.accepted and d.witness == SparseGuessParams((), ())


def test_w15_decider_needs_one_nonzero_cell():
    model, spec = build(["q", "acc"], [
        ("q", "*", "0", "q", [0], "+"),
        ("q", "*", "a", "acc", [0], None),
    ])
    assert not sparse_accept_decider_w15(spec, "", 0)
    d = sparse_accept_decider_w15(spec, "", 1)
    assert d.accepted
    assert brute_force_accepts(spec, model, "", Sparse(1, "0"), 8, 100) is not None


def test_w15_decider_moduli_agree_with_brute_force():
    rng = random.Random(60)
    for _ in range(40):
        spec = random_spec(rng, 3)
        word = rng.choice(["", "a", "ab"])
        budget = calibrated_budget(spec, W15, len(word), 24)
        brute = brute_force_accepts(spec, W15, word, Sparse(1, "0"), 24, budget) is not None
        assert sparse_accept_decider_w15(spec, word, 1).accepted == brute
        assert sparse_accept_decider_w15(spec, word, 1, modulus="lcm").accepted == brute


def test_w15_decider_cap():
    spec = random_spec(random.Random(1), 3)
    with pytest.raises(ResourceRefusal):
        sparse_accept_decider_w15(spec, "ab", 3, cap=10)


# --- trajectories on the two-way tape ------------------------------------

def test_trajectory_unit_drift():
    tc = classify_trajectory(walker({("s0", "0"): ("s0", "+")}), "s0")
    assert tc.kind == SHIFT and tc.shift == 1 and tc.period == 1


def test_trajectory_two_state_oscillation():
    tc = classify_trajectory(walker({("s0", "0"): ("s1", "+"), ("s1", "0"): ("s0", "-")}), "s0")
    assert tc.kind == PERIODIC and tc.width <= 2 and tc.period == 2


def test_trajectory_halting():
    w = walker({("s0", "0"): ("s1", "-"), ("s1", "0"): ("acc", None)}, accepting={"acc"})
    tc = classify_trajectory(w, "s0")
    assert tc.kind == HALTING and tc.steps == 2 and str(tc) == "HALTING outcome=accept steps=2"


def test_trajectory_matches_long_simulation():
    rng = random.Random(61)
    for _ in range(200):
        w = random_walker(rng, rng.randint(1, 6))
        for q in w.states:
            tc = classify_trajectory(w, q)
            states, positions = oracles.w2_zero_trace(w, q, 10 ** 4)
            if tc.kind == HALTING:
                assert states[-1] in w.accepting and len(states) - 1 == tc.steps
                continue
            assert len(states) == 10 ** 4 + 1
            for t in (0, 1, 7, 999, 10 ** 4):
                assert tc.state_at(t) == states[t] and tc.position_at(t) == positions[t]
            if tc.kind == PERIODIC:
                assert tc.width <= len(w)
            else:
                assert abs(tc.shift) <= len(w)


def test_first_hit_matches_simulation():
    rng = random.Random(62)
    for _ in range(100):
        w = random_walker(rng, rng.randint(1, 5))
        q = rng.choice(w.states)
        orbit = classify_trajectory(w, q).orbit
        _, positions = oracles.w2_zero_trace(w, q, 400)
        for level in (-3, -1, 1, 2, 9):
            hits = [t for t, p in enumerate(positions) if (p >= level if level > 0 else p <= level)]
            got = orbit.first_hit(level)
            if hits:
                assert got == hits[0]
            elif len(positions) == 401:
                assert got is None or got > 400


# --- sparse guesses on the two-way tape ----------------------------------

def test_w2_decider_ignoring_memory():
    for accept in (True, False):
        rows = [("q", ["<"], "*", "q", [1], None), ("q", ["a"], "*", "q", [1], None),
                ("q", ["b"], "*", "q", [1], None),
                ("q", [">"], "*", "acc" if accept else "q", [0], None)]
        model, spec = build(["q", "acc"], rows, model="W2")
        assert sparse_accept_decider_w2(spec, "ab", 2).accepted == accept


def _a_left_b_right():
    # walk left to the nearest non-zero cell, which must be 'a', then right to a 'b'
    rows = [
        ("q0", "*", "*", "qL", [0], "-"),
        ("qL", "*", "0", "qL", [0], "-"),
        ("qL", "*", "a", "qR", [0], "+"),
        ("qL", "*", "b", "spin", [0], None),
        ("qR", "*", "0", "qR", [0], "+"),
        ("qR", "*", "a", "qR", [0], "+"),
        ("qR", "*", "b", "acc", [0], None),
        ("spin", "*", "*", "spin", [0], None),
    ]
    return build(["q0", "qL", "qR", "spin", "acc"], rows, gamma=("0", "a", "b"), model="W2")


def test_w2_decider_a_left_b_right():
    model, spec = _a_left_b_right()
    d = sparse_accept_decider_w2(spec, "", 2)
    assert d.accepted
    assert run(spec, model, d.witness.content(spec.zero), "", 10_000)[0].accepted
    assert not sparse_accept_decider_w2(spec, "", 1).accepted
    budget = calibrated_budget(spec, model, 0, 16)
    assert brute_force_accepts(spec, model, "", Sparse(2, "0"), 16, budget) is not None


def test_block_oracle_against_direct_runs():
    rng = random.Random(63)
    for _ in range(80):
        w = random_walker(rng, rng.randint(2, 5))
        oracle = BlockOracle(w)
        cells = tuple(sorted({(rng.randint(-6, 6), "1") for _ in range(rng.randint(0, 3))}))
        layout = Layout(cells)
        direct = run_walker(w, W2, layout.content("0"), 5000)[0].accepted
        assert evaluate_layout(oracle, layout) == direct


def test_w2_decider_against_brute_force():
    rng = random.Random(64)
    for _ in range(30):
        spec = random_spec(rng, 3)
        budget = calibrated_budget(spec, W2, 1, 10)
        brute = brute_force_accepts(spec, W2, "a", Sparse(2, "0"), 10, budget) is not None
        assert sparse_accept_decider_w2(spec, "a", 2).accepted == brute


# --- halting routes ------------------------------------------------------

def test_halting_accepting_start():
    w = walker({}, accepting={"s0"})
    route = bounded_halting_search(w, W15, 5)
    assert route is not None and len(route) == 0


def test_halting_revisit_of_the_origin():
    w = walker({("s0", "a"): ("s1", "+"), ("s1", "b"): ("s2", "-"), ("s2", "a"): ("acc", None)},
               accepting={"acc"}, symbols=("0", "a", "b"))
    route = bounded_halting_search(w, W15, 6)
    assert route.symbols == ("a", "b", "a")
    assert dict(route.content(W15, "0").support) == {0: "a", 1: "b"}


def test_halting_conflict_on_the_grid():
    z2 = build_model("Z2")
    table = {("s0", "a"): ("s1", "E"), ("s4", "b"): ("acc", None)}
    for d in ("0", "a", "b"):
        table[("s1", d)] = ("s2", "N")
        table[("s2", d)] = ("s3", "W")
        table[("s3", d)] = ("s4", "S")
    w = walker(table, accepting={"acc"}, symbols=("0", "a", "b"), marks=z2.marks)
    for horizon in range(12):
        assert bounded_halting_search(w, z2, horizon) is None
    assert not route_consistent(z2, ["E", "N", "W", "S"], ["a", "0", "0", "0", "b"])
    assert route_consistent(z2, ["E", "N", "W", "S"], ["a", "0", "0", "0", "a"])


@pytest.mark.parametrize("kind", ["W15", "W2"])
def test_halting_search_matches_brute_force(kind):
    model = build_model(kind)
    rng = random.Random(65)
    horizon = 5
    for _ in range(40):
        w = random_walker(rng, 4)
        spec = walker_to_spec(w)
        brute = brute_force_accepts(spec, model, "", Unrestricted(), horizon + 1, horizon)
        route = bounded_halting_search(w, model, horizon)
        assert (route is not None) == (brute is not None)
        if route is not None:
            assert run_walker(w, model, route.content(model, "0"), horizon)[0].accepted


def test_halting_search_cap():
    w = random_walker(random.Random(2), 6, n_accepting=0)
    with pytest.raises(ResourceRefusal):
        bounded_halting_search(w, W2, 30, cap=50)
