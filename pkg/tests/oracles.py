"""Independent reference implementations used to cross-check the package.

Nothing here imports the decision procedures under test; each oracle is
the slowest obvious way to compute its answer.
"""

from math import prod


def zero_step(walker, s):
    """One zero-cell step: ('accept', t) | ('return', t) | ('move', t)."""
    t, m = walker.delta[(s, walker.zero)], walker.moves[(s, walker.zero)]
    if t in walker.accepting:
        return "accept", t
    if m == "-":
        return "return", t
    return "move", t


def zero_block_direct(walker, q, x):
    """(kind, state, at) for ``q`` entering ``x`` zero cells, stepping one cell at a time."""
    if q in walker.accepting:
        return "accept", q, 0
    s = q
    for i in range(x):
        kind, t = zero_step(walker, s)
        if kind != "move":
            return kind, t, i + 1
        s = t
    return "pass", s, None


def augmented_map(walker):
    """Zero map on nodes ('run', s) and ('ret', s); accept and return nodes absorb."""
    f = {}
    for s in walker.states:
        f[("ret", s)] = ("ret", s)
        if s in walker.accepting:
            f[("run", s)] = ("run", s)
            continue
        kind, t = zero_step(walker, s)
        f[("run", s)] = ("ret", t) if kind == "return" else ("run", t)
    return f


def absorbing_nodes(walker):
    return {("run", s) for s in walker.accepting} | {("ret", s) for s in walker.states}


def orbit_split(f, node):
    """(transient, period) of ``node`` under the function ``f``."""
    seen, t = {}, 0
    while node not in seen:
        seen[node] = t
        node, t = f[node], t + 1
    return seen[node], t - seen[node]


def zero_block_reduced(walker, q, x):
    """Like zero_block_direct, but with ``x`` reduced through the orbit period first."""
    transient, period = orbit_split(augmented_map(walker), ("run", q))
    if x > transient:
        x = transient + (x - transient) % period
    return zero_block_direct(walker, q, x)


def iterate(f, node, n):
    trail = [node]
    for _ in range(n):
        node = f[node]
        trail.append(node)
    return trail


def walker_run(walker, model, content, budget, count_final=True):
    """Step-by-step walker run: (accepted, return moves).

    ``count_final=False`` leaves out a return move that enters acceptance.
    """
    s, cell, returns = walker.start, model.initial, 0
    for _ in range(budget):
        if s in walker.accepting:
            return True, returns
        d = content.read(cell)
        m = walker.moves[(s, d)]
        s = walker.delta[(s, d)]
        if m is not None:
            cell = model.neighbor(cell, m)
            if m == "-" and cell == model.initial:
                returns += count_final or s not in walker.accepting
    return s in walker.accepting, returns


def w2_zero_trace(walker, q, steps):
    """States and positions of ``q`` on the all-zero two-way tape for ``steps`` steps."""
    states, positions, s, pos = [q], [0], q, 0
    for _ in range(steps):
        if s in walker.accepting:
            break
        t, m = walker.delta[(s, walker.zero)], walker.moves[(s, walker.zero)]
        pos += {"+": 1, "-": -1, None: 0}[m]
        s = t
        states.append(s)
        positions.append(pos)
    return states, positions


def sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(flags[i * i::i]))
    return [i for i, f in enumerate(flags) if f]


def crt_search(residues, moduli):
    for n in range(prod(moduli)):
        if all(n % p == b for b, p in zip(residues, moduli)):
            return n
    return None


def tm_run_direct(tm, word, s, budget=10_000):
    """List of (state, tape string, head) configurations of a plain TM run."""
    tape = ["0"] * s + list(word) + ["0"] * (s - len(word))
    head, q = s, tm.initial
    trace = [(q, "".join(tape), head)]
    for _ in range(budget):
        if q in tm.final or (q, int(tape[head])) not in tm.delta:
            return trace
        q, b, mv = tm.delta[(q, int(tape[head]))]
        tape[head] = str(b)
        head += 1 if mv == "R" else -1
        assert 0 <= head < len(tape)
        trace.append((q, "".join(tape), head))
    raise RuntimeError("no halt")


def code(bits):
    return int("1" + bits, 2)


def zero_block_table(walker, q, xmax):
    """zero_block_direct(walker, q, x) for every x in 0..xmax from one trajectory."""
    if q in walker.accepting:
        return [("accept", q, 0)] * (xmax + 1)
    table, s = [("pass", q, None)], q
    for i in range(xmax):
        kind, t = zero_step(walker, s)
        if kind != "move":
            table += [(kind, t, i + 1)] * (xmax - i)
            return table
        s = t
        table.append(("pass", s, None))
    return table
