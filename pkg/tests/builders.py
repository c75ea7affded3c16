"""Small spec builders for tests: rows go through the document parser."""

import json

from guesstape.io import parse_spec


def rows_doc(states, rows, *, sigma=("a", "b"), gamma=("0", "a"), zero="0", initial=None,
             accepting=("acc",), model="W15", heads=1, worm=None, params=None):
    """Rows are ``(state, inputs, memory, next, moves, command)``; '*' is a wildcard."""
    trans = []
    for q, ins, d, nxt, moves, cmd in rows:
        trans.append({"state": q, "inputs": ins if ins == "*" else list(ins), "memory": d,
                      "next": nxt, "moves": list(moves), "command": cmd})
    doc = {
        "model": {"kind": model, "params": params or {}},
        "automaton": {"states": list(states), "heads": heads, "input_alphabet": list(sigma),
                      "memory_alphabet": list(gamma), "zero_symbol": zero,
                      "initial": initial or states[0], "accepting": list(accepting),
                      "transitions": trans},
        "metadata": {},
    }
    if worm is not None:
        doc["automaton"]["worm"] = worm
    return doc


def build(states, rows, **kw):
    return parse_spec(json.dumps(rows_doc(states, rows, **kw)))
