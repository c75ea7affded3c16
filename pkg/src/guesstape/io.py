"""JSON spec documents for automata, WORM automata and Turing machines.

A document has a ``model`` section, an ``automaton`` section (or a ``tm``
section for a Turing machine) and free-form ``metadata``.  Transition
rows may use ``"*"`` for the state, any input entry or the memory symbol;
the first matching row wins.  :func:`emit_spec` always writes the
expanded, canonical form.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Optional

from .encoding.tm import TMSpec
from .machine import AutomatonSpec, Transition, WormSpec, validate_spec
from .memory import MemoryModel, model_from_dict

WILDCARD = "*"
MOVE_WORDS = {"L": -1, "S": 0, "R": 1}


class DocumentError(ValueError):
    def __init__(self, problems):
        self.problems = list(problems) if not isinstance(problems, str) else [problems]
        super().__init__("; ".join(self.problems))


@dataclass
class SpecDocument:
    model: Optional[MemoryModel]
    machine: object  # AutomatonSpec, WormSpec or TMSpec
    metadata: dict = field(default_factory=dict)


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    return doc


def _move(value, where):
    if isinstance(value, str) and value in MOVE_WORDS:
        return MOVE_WORDS[value]
    if value in (-1, 0, 1) and not isinstance(value, bool):
        return value
    raise DocumentError(f"{where}: bad head move {value!r}")


def _automaton(sec: dict) -> AutomatonSpec:
    try:
        states = list(sec["states"])
        heads = int(sec.get("heads", 1))
        sigma = tuple(sec["input_alphabet"])
        gamma = tuple(sec["memory_alphabet"])
        zero = sec["zero_symbol"]
        rows = sec["transitions"]
        initial = sec["initial"]
        accepting = sec["accepting"]
    except KeyError as exc:
        raise DocumentError(f"automaton section lacks {exc.args[0]!r}") from None
    if WILDCARD in states or WILDCARD in sigma or WILDCARD in gamma:
        raise DocumentError(f"{WILDCARD!r} is reserved for wildcards")
    tape = ("<",) + sigma + (">",)
    delta, problems = {}, []
    for i, row in enumerate(rows):
        where = f"transitions[{i}]"
        try:
            q, ins, d = row["state"], row["inputs"], row["memory"]
            nxt, moves = row["next"], row["moves"]
        except (KeyError, TypeError):
            problems.append(f"{where}: needs state, inputs, memory, next and moves")
            continue
        if ins == WILDCARD:
            ins = [WILDCARD] * heads
        if not isinstance(ins, list) or len(ins) != heads:
            problems.append(f"{where}: inputs must list one symbol per head")
            continue
        if q != WILDCARD and q not in states:
            problems.append(f"{where}: unknown state {q!r}")
            continue
        if d != WILDCARD and d not in gamma:
            problems.append(f"{where}: unknown memory symbol {d!r}")
            continue
        bad = [a for a in ins if a != WILDCARD and a not in tape]
        if bad:
            problems.append(f"{where}: unknown input symbol {bad[0]!r}")
            continue
        try:
            if not isinstance(moves, list) or len(moves) != heads:
                raise DocumentError(f"{where}: moves must list one move per head")
            tr = Transition(nxt, tuple(_move(m, where) for m in moves), row.get("command"))
        except DocumentError as exc:
            problems.extend(exc.problems)
            continue
        qs = states if q == WILDCARD else [q]
        ds = gamma if d == WILDCARD else (d,)
        choices = [tape if a == WILDCARD else (a,) for a in ins]
        for qq in qs:
            if qq in accepting:
                continue
            for combo in itertools.product(*choices):
                for dd in ds:
                    delta.setdefault((qq, combo, dd), tr)
    if problems:
        raise DocumentError(problems)
    return AutomatonSpec(tuple(states), heads, sigma, gamma, zero, delta, initial,
                         frozenset(accepting))


def _tm(sec: dict) -> TMSpec:
    try:
        delta = {}
        for i, row in enumerate(sec["transitions"]):
            key = (row["state"], int(row["read"]))
            if key in delta:
                raise DocumentError(f"tm.transitions[{i}]: duplicate row for {key!r}")
            delta[key] = (row["next"], int(row["write"]), row["move"])
        return TMSpec(tuple(sec["states"]), delta, sec["initial"], frozenset(sec["final"]),
                      sec.get("space"))
    except KeyError as exc:
        raise DocumentError(f"tm section lacks {exc.args[0]!r}") from None
    except ValueError as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(str(exc)) from None


def parse_document(text: str) -> SpecDocument:
    doc = _load(text)
    meta = doc.get("metadata") or {}
    if "tm" in doc:
        return SpecDocument(None, _tm(doc["tm"]), meta)
    if "model" not in doc or "automaton" not in doc:
        raise DocumentError("document needs model and automaton sections (or a tm section)")
    try:
        model = model_from_dict(doc["model"])
    except (KeyError, ValueError) as exc:
        raise DocumentError(f"model: {exc}") from None
    sec = doc["automaton"]
    machine = _automaton(sec)
    if sec.get("worm") is not None:
        worm = sec["worm"]
        machine = WormSpec(machine, frozenset(worm.get("writing", [])), dict(worm.get("fill", {})))
    problems = validate_spec(machine, model)
    if problems:
        raise DocumentError(problems)
    return SpecDocument(model, machine, meta)


def parse_spec(text: str):
    """Parse and validate; returns ``(MemoryModel, AutomatonSpec | WormSpec)``."""
    d = parse_document(text)
    if isinstance(d.machine, TMSpec):
        raise DocumentError("expected an automaton document, found a tm section")
    return d.model, d.machine


def state_name(s) -> str:
    """Printable name for constructed states such as ``(q, (1, 2))``."""
    if isinstance(s, str):
        return s
    if isinstance(s, tuple):
        return "(" + ",".join(state_name(x) for x in s) + ")"
    return str(s)


def rename_states(spec: AutomatonSpec) -> AutomatonSpec:
    names = {q: state_name(q) for q in spec.states}
    if len(set(names.values())) != len(names):
        raise DocumentError("state names collide after renaming")
    delta = {(names[q], ins, d): Transition(names[t.next], t.moves, t.command)
             for (q, ins, d), t in spec.delta.items()}
    return AutomatonSpec(tuple(names[q] for q in spec.states), spec.heads, spec.input_alphabet,
                         spec.memory_alphabet, spec.zero, delta, names[spec.initial],
                         frozenset(names[q] for q in spec.accepting))


def spec_to_dict(model: MemoryModel, machine, metadata: Optional[dict] = None) -> dict:
    worm = None
    if isinstance(machine, WormSpec):
        worm, machine = machine, machine.automaton
    rows = []
    for key in machine.keys():
        tr = machine.delta[key]
        q, ins, d = key
        rows.append({"state": q, "inputs": list(ins), "memory": d, "next": tr.next,
                     "moves": list(tr.moves), "command": tr.command})
    auto = {
        "states": list(machine.states),
        "heads": machine.heads,
        "input_alphabet": list(machine.input_alphabet),
        "memory_alphabet": list(machine.memory_alphabet),
        "zero_symbol": machine.zero,
        "initial": machine.initial,
        "accepting": [q for q in machine.states if q in machine.accepting],
        "transitions": rows,
    }
    if worm is not None:
        auto["worm"] = {"writing": [q for q in machine.states if q in worm.writing],
                        "fill": {q: worm.fill[q] for q in machine.states if q in worm.fill}}
    return {"model": model.describe(), "automaton": auto, "metadata": dict(metadata or {})}


def emit_spec(model: MemoryModel, machine, metadata: Optional[dict] = None) -> str:
    return json.dumps(spec_to_dict(model, machine, metadata), indent=2) + "\n"


def tm_to_dict(tm: TMSpec, metadata: Optional[dict] = None) -> dict:
    rows = [{"state": q, "read": a, "next": t[0], "write": t[1], "move": t[2]}
            for (q, a), t in sorted(tm.delta.items(), key=lambda kv: (tm.states.index(kv[0][0]), kv[0][1]))]
    sec = {"states": list(tm.states), "initial": tm.initial,
           "final": [q for q in tm.states if q in tm.final], "transitions": rows}
    if tm.space is not None:
        sec["space"] = tm.space
    return {"tm": sec, "metadata": dict(metadata or {})}


def emit_tm(tm: TMSpec, metadata: Optional[dict] = None) -> str:
    return json.dumps(tm_to_dict(tm, metadata), indent=2) + "\n"
