"""Command-line front end.

Exit codes: 0 accept/true, 1 reject/false, 2 resource refusal or
exhausted budget, 3 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions as cons
from .deciders import (ResourceRefusal, bounded_halting_search, brute_force_accepts,
                       classify_trajectory, sparse_accept_decider_w2, sparse_accept_decider_w15)
from .deciders.zeroblock import ZeroBlockProcedure
from .encoding import (TMError, choose_m, read_history_tokens, tm_history_guess,
                       verify_history_crt)
from .encoding.tm import BLANK, TMSpec
from .io import DocumentError, emit_spec, parse_document, parse_spec, rename_states
from .machine import Status, WormSpec, calibrated_budget, run, run_worm
from .memory import MemoryContent, Sparse, Unrestricted, build_model, format_content, parse_content

ACCEPT, REJECT, RESOURCE, INPUT_ERROR = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(INPUT_ERROR)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_spec(path: str):
    return parse_spec(_read(path))


def _word(text: str) -> tuple:
    return tuple(text.split(",")) if "," in text else tuple(text)


def _write(text: str, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _pick_state(walker, index):
    if not 0 <= index < len(walker.states):
        raise InputError(f"state index {index} out of range 0..{len(walker.states) - 1}")
    return walker.states[index]


def cmd_simulate(args) -> int:
    model, machine = _load_spec(args.spec)
    word = _word(args.input)
    if isinstance(machine, WormSpec):
        outcome, written, summary = run_worm(machine, model, word, args.budget,
                                             not args.no_loop_check)
        print(outcome)
        print(f"written cells: {len(written)}")
    else:
        content = MemoryContent(machine.zero)
        if args.guess:
            content = parse_content(_read(args.guess).splitlines(), model, machine.zero)
        outcome, summary = run(machine, model, content, word, args.budget, not args.no_loop_check)
        print(outcome)
    print(f"visited cells: {summary.visited_cells}")
    print(f"return moves: {summary.return_moves}")
    print(f"max fresh cells between returns: {max(summary.fresh_between_returns)}")
    if summary.loop_detected:
        print("loop detected")
    if outcome.accepted:
        return ACCEPT
    if outcome.status is Status.BUDGET and not summary.loop_detected:
        return RESOURCE
    return REJECT


def cmd_brute_force(args) -> int:
    model, spec = _load_spec(args.spec)
    if isinstance(spec, WormSpec):
        spec = cons.determinize_to_nondet(spec)
    word = _word(args.input)
    constraint = Sparse(args.k, spec.zero) if args.k is not None else Unrestricted()
    budget = args.budget or calibrated_budget(spec, model, len(word), args.window)
    found = brute_force_accepts(spec, model, word, constraint, args.window, budget, args.cap)
    if found is None:
        print("no accepting guess in the window")
        return REJECT
    print("accepting guess:")
    sys.stdout.write(format_content(found) or "(all default)\n")
    return ACCEPT


def cmd_decide(args) -> int:
    model, spec = _load_spec(args.spec)
    word = _word(args.input)
    if model.kind == "W15":
        res = sparse_accept_decider_w15(spec, word, args.k, args.cap, args.modulus)
        witness = res.witness and res.witness.content(spec.zero)
    elif model.kind == "W2":
        res = sparse_accept_decider_w2(spec, word, args.k, args.cap)
        witness = res.witness and res.witness.content(spec.zero)
    else:
        raise InputError(f"no sparse decider for {model.kind}")
    print(f"threshold={res.threshold} period={res.period} candidates={res.candidates}")
    if res.accepted:
        print("ACCEPT witness:")
        sys.stdout.write(format_content(witness) or "(all default)\n")
        return ACCEPT
    print("REJECT")
    return REJECT


def cmd_f0(args) -> int:
    model, spec = _load_spec(args.spec)
    walker = cons.surface_automaton(spec, model, _word(args.input))
    q = _pick_state(walker, args.state)
    out = ZeroBlockProcedure(walker)(q, args.x)
    print(f"state {q!r} x={args.x}: {out}")
    return ACCEPT if out.kind == "accept" else REJECT


def cmd_trajectory(args) -> int:
    model, spec = _load_spec(args.spec)
    if model.kind != "W2":
        raise InputError("trajectory needs a W2 model")
    walker = cons.surface_automaton(spec, model, _word(args.input))
    q = _pick_state(walker, args.state)
    cls = classify_trajectory(walker, q)
    print(f"state {q!r}: {cls}")
    return ACCEPT if cls.kind == "halting" else REJECT


def cmd_construct(args) -> int:
    if args.what == "perversed":
        if args.omega is None:
            raise InputError("perversed needs --omega")
        rec = cons.perversed_tally_recognizer(args.omega, args.default)
        _write(emit_spec(rec.model, rec.spec, {"name": "perversed tally recognizer"}), args.out)
        if args.guess_for is not None:
            sys.stderr.write(format_content(rec.guess(args.guess_for)))
        return ACCEPT
    if not args.spec:
        raise InputError(f"{args.what} needs --spec")
    model, machine = _load_spec(args.spec)
    if args.what == "determinize":
        if not isinstance(machine, WormSpec):
            raise InputError("determinize needs a WORM spec")
        result = cons.determinize_to_nondet(machine)
    elif isinstance(machine, WormSpec):
        raise InputError(f"{args.what} needs a plain automaton spec")
    elif args.what == "surface":
        walker = cons.surface_automaton(machine, model, _word(args.input))
        result = rename_states(cons.walker_to_spec(walker))
    else:
        if args.k is None:
            raise InputError("verifier-product needs --k")
        result = rename_states(cons.sparse_verifier_product(machine, args.k, model.kind))
    _write(emit_spec(model, result, {"name": f"{args.what} of {Path(args.spec).name}"}), args.out)
    return ACCEPT


def _load_tm(path) -> TMSpec:
    doc = parse_document(_read(path))
    if not isinstance(doc.machine, TMSpec):
        raise InputError("expected a document with a tm section")
    return doc.machine


def cmd_history(args) -> int:
    tm = _load_tm(args.tm)
    s = args.space or tm.space
    if not s:
        raise InputError("need --space (or a space field in the tm section)")
    if args.action == "generate":
        guess, accepted = tm_history_guess(tm, args.input, s, args.budget)
        _write("".join(t + "\n" for t in guess.tokens), args.out)
        print(f"blocks={len(guess.configs)} accepted={accepted}", file=sys.stderr)
        return ACCEPT if accepted else REJECT
    if not args.guess:
        raise InputError("verify needs --guess")
    tokens = read_history_tokens(_read(args.guess).splitlines())
    guess = MemoryContent(BLANK, dict(enumerate(tokens)))
    m = args.m or choose_m(s)
    verdict = verify_history_crt(tm, args.input, s, m, guess)
    for stage in verdict.stages:
        print(stage)
    print("ACCEPT" if verdict.accepted else "REJECT")
    return ACCEPT if verdict.accepted else REJECT


def cmd_halting_search(args) -> int:
    model, spec = _load_spec(args.spec)
    walker = cons.surface_automaton(spec, model, _word(args.input))
    route = bounded_halting_search(walker, model, args.horizon, args.cap)
    if route is None:
        print(f"no consistent accepting route within {args.horizon} steps")
        return REJECT
    print(f"route of length {len(route)}")
    for d, m in zip(route.symbols, route.marks):
        print(f"read {d} move {m if m is not None else 'stay'}")
    return ACCEPT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="guesstape", description="Automata with guess memories.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def spec_args(sp, need_input=True):
        sp.add_argument("--spec", required=True, help="JSON spec document")
        if need_input:
            sp.add_argument("--input", default="", help="input word (characters, or comma separated)")

    sp = sub.add_parser("simulate", help="run a spec on one guess")
    spec_args(sp)
    sp.add_argument("--guess", help="guess file with 'index symbol' lines")
    sp.add_argument("--budget", type=int, default=100_000)
    sp.add_argument("--no-loop-check", action="store_true")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("brute-force", help="search all guesses in a window")
    spec_args(sp)
    sp.add_argument("--window", type=int, required=True)
    sp.add_argument("--k", type=int, help="sparsity bound (default: unrestricted)")
    sp.add_argument("--budget", type=int, help="step budget (default: calibrated)")
    sp.add_argument("--cap", type=int)
    sp.set_defaults(func=cmd_brute_force)

    sp = sub.add_parser("decide", help="exact k-sparse acceptance (W15 or W2)")
    spec_args(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--modulus", choices=("orbit", "lcm"), default="orbit")
    sp.add_argument("--cap", type=int)
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("f0", help="walker outcome on a block of zeros")
    spec_args(sp)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--state", type=int, default=0, help="walker state index (0 is the start)")
    sp.set_defaults(func=cmd_f0)

    sp = sub.add_parser("trajectory", help="classify a W2 walker orbit on zeros")
    spec_args(sp)
    sp.add_argument("--state", type=int, default=0)
    sp.set_defaults(func=cmd_trajectory)

    sp = sub.add_parser("construct", help="emit a constructed spec")
    sp.add_argument("what", choices=("determinize", "surface", "verifier-product", "perversed"))
    sp.add_argument("--spec")
    sp.add_argument("--input", default="")
    sp.add_argument("--k", type=int)
    sp.add_argument("--omega")
    sp.add_argument("--default", type=int, default=1)
    sp.add_argument("--guess-for", type=int, help="also print the intended guess for 1^n to stderr")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("history", help="Turing machine histories as guesses")
    sp.add_argument("action", choices=("generate", "verify"))
    sp.add_argument("--tm", required=True)
    sp.add_argument("--input", default="")
    sp.add_argument("--space", type=int)
    sp.add_argument("--budget", type=int, default=10_000)
    sp.add_argument("--guess")
    sp.add_argument("--m", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_history)

    sp = sub.add_parser("halting-search", help="shortest consistent accepting route")
    spec_args(sp)
    sp.add_argument("--horizon", type=int, required=True)
    sp.add_argument("--cap", type=int)
    sp.set_defaults(func=cmd_halting_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else INPUT_ERROR
    try:
        return args.func(args)
    except ResourceRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return RESOURCE
    except (InputError, DocumentError, TMError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
