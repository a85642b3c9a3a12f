"""Reading and writing the HOA subset used for co-Büchi automata, plus DOT export.

The subset::

    HOA: v1
    name: "fig2"                 (optional)
    States: 3
    Start: 0
    AP: 3 "a" "b" "c"            (one entry per letter, in alphabet order)
    acc-name: co-Buchi
    Acceptance: 1 Fin(0)
    --BODY--
    State: 0
    [0] 0                        (letter index, destination: non-alpha edge)
    [2] 2 {0}                    (edge in acceptance set 0: alpha edge)
    --END--

``Alias: @x 1`` lines are accepted and let edges use ``[@x]``.  Implicit edges,
state-based acceptance and other acceptance conditions are rejected.
"""
from __future__ import annotations

import re
import shlex

from .automaton import ALPHA, NONALPHA, TncwAutomaton, Transition, check_valid, validate


class HoaError(ValueError):
    """Raised for malformed or unsupported HOA input."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class HoaSyntaxError(HoaError):
    pass


class HoaSemanticError(HoaError):
    pass


_EDGE = re.compile(r"^\[\s*(@?[\w]+)\s*\]\s+(\d+)\s*(\{\s*([\d\s]*)\})?\s*$")
_STATE = re.compile(r'^State:\s*(\d+)\s*("(?:[^"\\]|\\.)*")?\s*(\{[\d\s]*\})?\s*$')


def parse_hoa(text: str) -> TncwAutomaton:
    lines = text.splitlines()
    headers: dict[str, tuple[str, int]] = {}
    aliases: dict[str, int] = {}
    i = 0
    while i < len(lines) and not lines[i].strip():
        i += 1
    if i == len(lines) or not lines[i].strip().startswith("HOA:"):
        raise HoaSyntaxError("expected 'HOA: v1' header", i + 1, 1)
    body_start = None
    for i in range(i, len(lines)):
        raw = lines[i]
        line = raw.strip()
        if not line:
            continue
        if line == "--BODY--":
            body_start = i + 1
            break
        if ":" not in line:
            raise HoaSyntaxError(f"malformed header line {line!r}", i + 1, 1)
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if key == "Alias":
            m = re.match(r"^@(\w+)\s+(\d+)$", value)
            if not m:
                raise HoaSyntaxError(f"malformed Alias {value!r}", i + 1, raw.index(":") + 2)
            aliases["@" + m.group(1)] = int(m.group(2))
            continue
        headers[key] = (value, i + 1)
    if body_start is None:
        raise HoaSyntaxError("missing --BODY--", len(lines), 1)

    if headers.get("HOA", ("",))[0] != "v1":
        raise HoaSyntaxError("only 'HOA: v1' is supported", 1, 1)

    def need(key):
        if key not in headers:
            raise HoaSyntaxError(f"missing header {key!r}", body_start, 1)
        return headers[key]

    def integer(key):
        value, ln = need(key)
        if not value.isdigit():
            raise HoaSyntaxError(f"{key} expects an integer, got {value!r}", ln, len(key) + 3)
        return int(value)

    n = integer("States")
    start = integer("Start")
    ap_value, ap_line = need("AP")
    try:
        ap = shlex.split(ap_value)
    except ValueError as e:
        raise HoaSyntaxError(f"bad AP list: {e}", ap_line, 5) from None
    if not ap or not ap[0].isdigit() or int(ap[0]) != len(ap) - 1:
        raise HoaSyntaxError("AP count does not match the listed letters", ap_line, 5)
    alphabet = tuple(ap[1:])

    acc_name = headers.get("acc-name", (None, 0))
    if acc_name[0] is not None and acc_name[0].replace(" ", "") not in ("co-Buchi", "co-Büchi"):
        raise HoaSemanticError(f"unsupported acceptance {acc_name[0]!r}; only co-Buchi is supported", acc_name[1], 1)
    acc, acc_line = need("Acceptance")
    if re.sub(r"\s+", "", acc) != "1Fin(0)":
        raise HoaSemanticError(f"unsupported Acceptance {acc!r}; expected '1 Fin(0)'", acc_line, 1)
    name = ""
    if "name" in headers:
        try:
            name = shlex.split(headers["name"][0])[0]
        except (ValueError, IndexError):
            raise HoaSyntaxError("bad name header", headers["name"][1], 1) from None

    trs: set[Transition] = set()
    current = None
    ended = False
    for j in range(body_start, len(lines)):
        raw = lines[j]
        line = raw.strip()
        col = len(raw) - len(raw.lstrip()) + 1
        if not line:
            continue
        if line == "--END--":
            ended = True
            break
        if line.startswith("State:"):
            m = _STATE.match(line)
            if not m:
                raise HoaSyntaxError(f"malformed state line {line!r}", j + 1, col)
            if m.group(3):
                raise HoaSemanticError("state-based acceptance is not supported", j + 1, col + line.index("{"))
            current = int(m.group(1))
            if current >= n:
                raise HoaSemanticError(f"state {current} out of range", j + 1, col)
            continue
        m = _EDGE.match(line)
        if not m:
            if line.startswith("[") or line[0].isdigit():
                raise HoaSyntaxError(f"malformed edge {line!r}", j + 1, col)
            raise HoaSyntaxError(f"unexpected {line!r}", j + 1, col)
        if current is None:
            raise HoaSyntaxError("edge before any State:", j + 1, col)
        label = m.group(1)
        if label.startswith("@"):
            if label not in aliases:
                raise HoaSemanticError(f"unknown alias {label}", j + 1, col + 1)
            letter = aliases[label]
        elif label.isdigit():
            letter = int(label)
        else:
            raise HoaSyntaxError(f"label must be a letter index, got {label!r}", j + 1, col + 1)
        if letter >= len(alphabet):
            raise HoaSemanticError(f"letter index {letter} out of range", j + 1, col + 1)
        dst = int(m.group(2))
        if dst >= n:
            raise HoaSemanticError(f"destination {dst} out of range", j + 1, col)
        sets = m.group(4).split() if m.group(3) else []
        if any(s != "0" for s in sets):
            raise HoaSemanticError("only acceptance set 0 exists", j + 1, col)
        trs.add(Transition(current, letter, dst, ALPHA if sets else NONALPHA))
    if not ended:
        raise HoaSyntaxError("missing --END--", len(lines), 1)

    a = TncwAutomaton(alphabet, n, start, frozenset(trs), name)
    problems = validate(a)
    if problems:
        raise HoaSemanticError("invalid automaton: " + "; ".join(problems))
    return a


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_hoa(a: TncwAutomaton) -> str:
    check_valid(a)
    out = ["HOA: v1"]
    if a.name:
        out.append(f"name: {_quote(a.name)}")
    out += [
        f"States: {a.num_states}",
        f"Start: {a.initial}",
        "AP: " + " ".join([str(len(a.alphabet))] + [_quote(s) for s in a.alphabet]),
        "acc-name: co-Buchi",
        "Acceptance: 1 Fin(0)",
        "properties: trans-labels explicit-labels trans-acc",
        "--BODY--",
    ]
    by_src: dict[int, list[Transition]] = {q: [] for q in a.states}
    for t in a.sorted_transitions:
        by_src[t.src].append(t)
    for q in a.states:
        out.append(f"State: {q}")
        for t in by_src[q]:
            out.append(f"[{t.letter}] {t.dst}" + (" {0}" if t.alpha else ""))
    out.append("--END--")
    return "\n".join(out) + "\n"


def to_dot(a: TncwAutomaton) -> str:
    """Graphviz rendering; alpha edges are dashed."""
    check_valid(a)
    title = a.name or "A"
    out = [f"digraph {_quote(title)} {{", "  rankdir=LR;", '  __init [shape=point, label=""];']
    for q in a.states:
        out.append(f'  {q} [shape=circle, label="q{q}"];')
    out.append(f"  __init -> {a.initial};")
    for t in a.sorted_transitions:
        style = ", style=dashed" if t.alpha else ""
        out.append(f"  {t.src} -> {t.dst} [label={_quote(a.alphabet[t.letter])}{style}];")
    out.append("}")
    return "\n".join(out) + "\n"
