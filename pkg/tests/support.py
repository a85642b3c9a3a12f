"""Strategies and slow reference implementations shared by the test modules."""
from __future__ import annotations

import itertools
import string

from hypothesis import strategies as st

from gfgcanon.automaton import ALPHA, NONALPHA, LassoWord, TncwAutomaton, Transition, make_automaton


@st.composite
def deterministic_automata(draw, max_states=4, letters=(2, 3)):
    n = draw(st.integers(1, max_states))
    k = draw(st.sampled_from(letters))
    trs = []
    for q in range(n):
        for l in range(k):
            trs.append(Transition(q, l, draw(st.integers(0, n - 1)), ALPHA if draw(st.booleans()) else NONALPHA))
    return TncwAutomaton(tuple(string.ascii_lowercase[:k]), n, 0, frozenset(trs))


@st.composite
def automata(draw, max_states=3, letters=(2,)):
    """Total, possibly nondeterministic automata with at most one mark per edge."""
    n = draw(st.integers(1, max_states))
    k = draw(st.sampled_from(letters))
    trs = []
    for q in range(n):
        for l in range(k):
            dsts = draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
            for d in sorted(dsts):
                trs.append(Transition(q, l, d, ALPHA if draw(st.booleans()) else NONALPHA))
    return TncwAutomaton(tuple(string.ascii_lowercase[:k]), n, draw(st.integers(0, n - 1)), frozenset(trs))


@st.composite
def lassos(draw, k=2, max_u=3, max_v=3):
    u = draw(st.lists(st.integers(0, k - 1), max_size=max_u))
    v = draw(st.lists(st.integers(0, k - 1), min_size=1, max_size=max_v))
    return LassoWord(tuple(u), tuple(v))


def explicit_lasso_member(a: TncwAutomaton, q: int, w: LassoWord) -> bool:
    """Product of ``a`` with the lasso's positions; accept iff a reachable cycle avoids alpha."""
    letters = w.prefix + w.period
    u = len(w.prefix)

    def nxt(i):
        return i + 1 if i + 1 < len(letters) else u

    start = (q, 0)
    reach = {start}
    todo = [start]
    while todo:
        p, i = todo.pop()
        for d in a.successors(p, letters[i]):
            node = (d, nxt(i))
            if node not in reach:
                reach.add(node)
                todo.append(node)

    def safe_succ(node):
        p, i = node
        return [(d, nxt(i)) for d in a.safe_successors(p, letters[i])]

    for node in reach:
        seen = set()
        todo = list(safe_succ(node))
        while todo:
            m = todo.pop()
            if m == node:
                return True
            if m not in seen:
                seen.add(m)
                todo.extend(safe_succ(m))
    return False


def safe_language_automaton(a: TncwAutomaton) -> TncwAutomaton:
    """Automaton whose language from each state is the safe language of ``a`` there.

    Alpha edges are dropped; letters without a non-alpha successor go to an
    alpha-looping sink, so an accepting run must stay non-alpha throughout.
    """
    sink = a.num_states
    trs = [t for t in a.transitions if not t.alpha]
    for q in a.states:
        for l in a.letters:
            if not a.safe_successors(q, l):
                trs.append(Transition(q, l, sink, ALPHA))
    trs += [Transition(sink, l, sink, ALPHA) for l in a.letters]
    return TncwAutomaton(a.alphabet, a.num_states + 1, a.initial, frozenset(trs))


def all_tdcws(alphabet, n):
    """Every total deterministic automaton with ``n`` states, initial 0, every marking."""
    k = len(alphabet)
    cells = [(q, l) for q in range(n) for l in range(k)]
    for dsts in itertools.product(range(n), repeat=len(cells)):
        for marks in itertools.product((NONALPHA, ALPHA), repeat=len(cells)):
            yield TncwAutomaton(
                tuple(alphabet), n, 0, frozenset(Transition(q, l, d, m) for (q, l), d, m in zip(cells, dsts, marks))
            )


def universal(alphabet) -> TncwAutomaton:
    return make_automaton(alphabet, 1, 0, [(0, s, 0) for s in alphabet])


def non_gfg() -> TncwAutomaton:
    """a.a^ω + a.b^ω where the first a commits to one of the two tails."""
    return make_automaton(
        "ab",
        4,
        0,
        [
            (0, "a", 1, "alpha"),
            (0, "a", 2, "alpha"),
            (0, "b", 3, "alpha"),
            (1, "a", 1, "nonalpha"),
            (1, "b", 3, "alpha"),
            (2, "b", 2, "nonalpha"),
            (2, "a", 3, "alpha"),
            (3, "a", 3, "alpha"),
            (3, "b", 3, "alpha"),
        ],
        "commit",
    )


def semdet_non_gfg() -> TncwAutomaton:
    """Universal language, safe- and semantically deterministic, yet not GFG.

    Only state 2 is safe on every word.  The letter picker answers ``a`` in
    state 0 and ``b`` in state 1, which keeps every run inside {0, 1} with an
    alpha step in each round.
    """
    return make_automaton(
        "ab",
        3,
        0,
        [
            (0, "a", 0, "alpha"), (0, "a", 1, "nonalpha"),
            (0, "b", 0, "alpha"), (0, "b", 1, "alpha"), (0, "b", 2, "alpha"),
            (1, "a", 0, "nonalpha"), (1, "a", 1, "alpha"), (1, "a", 2, "alpha"),
            (1, "b", 0, "alpha"),
            (2, "a", 0, "alpha"), (2, "a", 1, "alpha"), (2, "a", 2, "nonalpha"),
            (2, "b", 2, "nonalpha"),
        ],
        "trap",
    )
