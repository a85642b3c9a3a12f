"""Command-line front end.

Automata are read from a file path, a fixture name, or stdin (``-`` or no
argument) and written as HOA to stdout unless ``-o`` is given, so stages
compose with pipes.  Exit status: 0 success, 1 negative decision, 2 usage,
input or bound error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import fixtures
from .automaton import BoundExceeded, TncwAutomaton, validate
from .canon import Flavor, canonical_form, saturate_homogeneous, saturate_max
from .generate import random_tdcw
from .hoa import HoaError, parse_hoa, to_dot, write_hoa
from .iso import isomorphic, safe_isomorphic
from .minimize import NotNiceError, minimize_trace
from .oracle import DBP_BOUND, SEARCH_LIMIT, dbp_check, gfg_verify, lasso_equiv_bounded, min_tdcw_search_bounded
from .semantics import compute_relations, language_equiv
from .structure import safe_components

OK, NEGATIVE, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _color(text: str, code: str) -> str:
    if os.environ.get("GFGCANON_COLOR", "").lower() in ("1", "always", "yes", "true"):
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _diag(msg: str, kind: str = "error") -> None:
    print(_color(f"{kind}:", "31" if kind == "error" else "33"), msg, file=sys.stderr)


def _load(src: str | None) -> TncwAutomaton:
    if src is None or src == "-":
        text = sys.stdin.read()
        if not text.strip():
            raise UsageError("no automaton on stdin")
        return parse_hoa(text)
    path = Path(src)
    if path.exists():
        return parse_hoa(path.read_text())
    if src in fixtures.NAMES:
        return fixtures.load(src)
    raise UsageError(f"{src!r} is neither a file nor a fixture name")


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _matrix(name: str, table, a: TncwAutomaton) -> str:
    rows = [name]
    for q in a.states:
        rows.append(f"  q{q}: " + " ".join("1" if table[q, s] else "." for s in a.states))
    return "\n".join(rows)


def cmd_validate(args) -> int:
    a = _load(args.input)
    problems = validate(a)
    if args.json:
        _dump({"valid": not problems, "problems": problems})
    else:
        print("valid" if not problems else "\n".join(problems))
    return OK if not problems else NEGATIVE


def cmd_safe_components(args) -> int:
    a = _load(args.input)
    dec = safe_components(a)
    comps = [sorted(c) for c in dec.components]
    if args.json:
        _dump({"components": comps, "component_of": list(dec.component_of)})
    else:
        for i, c in enumerate(comps):
            print(f"S{i}: " + " ".join(f"q{q}" for q in c))
    return OK


def cmd_relations(args) -> int:
    a = _load(args.input)
    rel = compute_relations(a)
    tables = {
        "equiv": rel.equiv,
        "safe_contained": rel.safe_contained,
        "strongly_equiv": rel.strongly_equiv,
        "subsafe": rel.subsafe,
    }
    if args.json:
        _dump({k: v.astype(int).tolist() for k, v in tables.items()})
    else:
        print("\n".join(_matrix(k, v, a) for k, v in tables.items()))
    return OK


def cmd_equiv(args) -> int:
    a, b = _load(args.left), _load(args.right)
    same = language_equiv(a, b)
    if args.json:
        _dump({"equivalent": same})
    else:
        print("equivalent" if same else "not equivalent")
    return OK if same else NEGATIVE


def cmd_minimize(args) -> int:
    trace = minimize_trace(_load(args.input))
    if args.trace:
        print(json.dumps(trace.to_json(), sort_keys=True), file=sys.stderr)
    _emit(write_hoa(trace.result), args.output)
    return OK


def cmd_canonize(args) -> int:
    a = _load(args.input)
    flavor = Flavor(args.mode)
    if args.no_minimize:
        if flavor is Flavor.MAX:
            out = saturate_max(a)
        else:
            out = saturate_homogeneous(a)
    else:
        out = canonical_form(a, flavor)
    _emit(write_hoa(out), args.output)
    return OK


def cmd_iso(args) -> int:
    a, b = _load(args.left), _load(args.right)
    result = safe_isomorphic(a, b) if args.safe_only else isomorphic(a, b)
    if result:
        _dump(result.to_json())
        return OK
    if args.json:
        _dump({"refusal": result.reason})
    else:
        print(result.reason)
    return NEGATIVE


def cmd_verify_gfg(args) -> int:
    a = _load(args.input)
    result = gfg_verify(a, replay=args.replay, seed=args.seed)
    if args.json:
        _dump({"gfg": bool(result), "reason": getattr(result, "reason", None)})
    else:
        print("GFG" if result else f"not GFG: {result.reason}")
    return OK if result else NEGATIVE


def cmd_dbp(args) -> int:
    result = dbp_check(_load(args.input), bound=args.bound)
    if not result:
        print(result.reason)
        return NEGATIVE
    _emit(write_hoa(result), args.output)
    return OK


def cmd_lasso_equiv(args) -> int:
    a, b = _load(args.left), _load(args.right)
    w = lasso_equiv_bounded(a, b, args.max_u, args.max_v)
    if args.json:
        _dump({"counterexample": None if w is None else {"prefix": [a.alphabet[i] for i in w.prefix],
                                                          "period": [a.alphabet[i] for i in w.period]}})
    elif w is None:
        print(f"no disagreement on lassos with |u| <= {args.max_u}, |v| <= {args.max_v}")
    else:
        print(w.render(a.alphabet))
    return OK if w is None else NEGATIVE


def cmd_search_min_tdcw(args) -> int:
    result = min_tdcw_search_bounded(_load(args.input), args.max_states, args.limit)
    if result is None:
        print(f"no equivalent tDCW with at most {args.max_states} states")
        return NEGATIVE
    _emit(write_hoa(result), args.output)
    return OK


def cmd_dot(args) -> int:
    _emit(to_dot(_load(args.input)), args.output)
    return OK


def cmd_random(args) -> int:
    _emit(write_hoa(random_tdcw(args.states, args.letters, args.seed, args.density)), args.output)
    return OK


def cmd_fixtures(args) -> int:
    if not args.name:
        print("\n".join(fixtures.NAMES))
        return OK
    if args.name not in fixtures.NAMES:
        raise UsageError(f"unknown fixture {args.name!r}; choose from {', '.join(fixtures.NAMES)}")
    _emit(fixtures.fixture_text(args.name), args.output)
    return OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gfgcanon", description="Minimize and canonize transition-based co-Buchi automata.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, inputs=1, output=False):
        sp = sub.add_parser(name, help=help)
        if inputs == 1:
            sp.add_argument("input", nargs="?", default="-", help="HOA file, fixture name, or - for stdin")
        elif inputs == 2:
            sp.add_argument("left")
            sp.add_argument("right")
        if output:
            sp.add_argument("-o", "--output", default=None)
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "list invariant violations")
    add("safe-components", cmd_safe_components, "SCCs of the non-alpha graph")
    add("relations", cmd_relations, "equivalence and safe-containment tables")
    add("equiv", cmd_equiv, "decide language equivalence", inputs=2)
    sp = add("minimize", cmd_minimize, "minimize a deterministic or nice GFG automaton", output=True)
    sp.add_argument("--trace", action="store_true", help="print H, frontier and class map as JSON on stderr")
    sp = add("canonize", cmd_canonize, "minimize and saturate with alpha transitions", output=True)
    sp.add_argument("--mode", choices=[f.value for f in Flavor], default=Flavor.MAX.value)
    sp.add_argument("--no-minimize", action="store_true", help="saturate the input as is")
    sp = add("iso", cmd_iso, "decide isomorphism", inputs=2)
    sp.add_argument("--safe-only", action="store_true", help="only require non-alpha transitions to match")
    sp = add("verify-gfg", cmd_verify_gfg, "decide good-for-gameness by a letter game")
    sp.add_argument("--replay", type=_natural, default=200, help="random lassos replayed against the strategy")
    sp.add_argument("--seed", type=int, default=0)
    sp = add("dbp", cmd_dbp, "find a deterministic pruning", output=True)
    sp.add_argument("--bound", type=_positive, default=DBP_BOUND)
    sp = add("lasso-equiv", cmd_lasso_equiv, "compare on all short lassos", inputs=2)
    sp.add_argument("--max-u", type=_natural, default=4)
    sp.add_argument("--max-v", type=_positive, default=4)
    sp = add("search-min-tdcw", cmd_search_min_tdcw, "exhaustive search for a small equivalent tDCW", output=True)
    sp.add_argument("--max-states", type=_positive, default=3)
    sp.add_argument("--limit", type=_positive, default=SEARCH_LIMIT)
    add("dot", cmd_dot, "render as Graphviz", output=True)
    sp = add("random", cmd_random, "emit a random total tDCW", inputs=0, output=True)
    sp.add_argument("--states", type=_positive, required=True)
    sp.add_argument("--letters", type=_positive, required=True)
    sp.add_argument("--density", type=float, default=0.3)
    sp.add_argument("--seed", type=int, required=True)
    sp = add("fixtures", cmd_fixtures, "emit a bundled example automaton", inputs=0, output=True)
    sp.add_argument("name", nargs="?")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ERROR if e.code else OK
    try:
        return args.func(args)
    except (HoaError, UsageError, NotNiceError, BoundExceeded, ValueError) as e:
        _diag(str(e))
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
