"""Independent brute-force and game-based verifiers.

These are deliberately separate from the constructions they check: GFGness is
decided by a letter game against a deterministic monitor, DBP by enumerating
prunings, equivalence refutations by exhaustive lasso sweeps, and minimality by
enumerating small deterministic automata.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator

from .automaton import (
    ALPHA,
    NONALPHA,
    BoundExceeded,
    LassoWord,
    Refusal,
    TncwAutomaton,
    Transition,
    restrict,
    reachable_states,
)
from .parity import EVEN, ODD, ParityGame, solve
from .semantics import compute_relations, determinize_breakpoint, language_equiv, lasso_member
from .structure import sccs

DBP_BOUND = 10**6
SEARCH_LIMIT = 10**6
REPLAY_LASSOS = 200


@dataclass(frozen=True)
class GfgStrategy:
    """Resolution strategy with memory = monitor state.

    ``moves[(p, m, letter)]`` is the candidate state chosen when the candidate
    is in ``p``, the monitor in ``m``, and ``letter`` is read.
    """

    automaton: TncwAutomaton
    monitor: TncwAutomaton
    moves: dict[tuple[int, int, int], int]

    @property
    def start(self) -> tuple[int, int]:
        return self.automaton.initial, self.monitor.initial

    def step(self, p: int, m: int, letter: int) -> tuple[int, int, bool]:
        p2 = self.moves[(p, m, letter)]
        (m2,) = self.monitor.successors(m, letter)
        return p2, m2, self.automaton.mark_of(p, letter, p2) is ALPHA

    def accepts(self, word: LassoWord) -> bool:
        """Whether the strategy-driven run on ``word`` is accepting."""
        letters = word.prefix + word.period
        u = len(word.prefix)
        p, m = self.start
        i = 0
        seen: dict[tuple[int, int, int], int] = {}
        marks: list[bool] = []
        while (p, m, i) not in seen:
            seen[(p, m, i)] = len(marks)
            p, m, alpha = self.step(p, m, letters[i])
            marks.append(alpha)
            i = i + 1 if i + 1 < len(letters) else u
        return not any(marks[seen[(p, m, i)]:])

    def consistent(self) -> bool:
        a = self.automaton
        return all(p2 in a.successors(p, l) for (p, _, l), p2 in self.moves.items())


def random_lassos(alphabet_size: int, count: int, seed: int = 0, max_u: int = 6, max_v: int = 6) -> Iterator[LassoWord]:
    rng = random.Random(seed)
    for _ in range(count):
        u = tuple(rng.randrange(alphabet_size) for _ in range(rng.randint(0, max_u)))
        v = tuple(rng.randrange(alphabet_size) for _ in range(rng.randint(1, max_v)))
        yield LassoWord(u, v)


def letter_game(a: TncwAutomaton, monitor: TncwAutomaton):
    """Arena where ODD picks letters and EVEN resolves ``a``'s nondeterminism.

    Priorities: monitor alpha step 2 (word rejected infinitely often, EVEN is
    excused), candidate alpha step 1, otherwise 0.
    """
    game = ParityGame()
    letter_pos: dict[tuple[int, int], int] = {}
    choice_pos: dict[tuple[int, int, int], int] = {}
    todo = [(a.initial, monitor.initial)]
    letter_pos[todo[0]] = game.add_position(ODD)
    while todo:
        p, m = todo.pop()
        v = letter_pos[(p, m)]
        for l in a.letters:
            c = game.add_position(EVEN)
            choice_pos[(p, m, l)] = c
            game.add_edge(v, c, 0)
            (m2,) = monitor.successors(m, l)
            mon_alpha = bool(monitor.alpha_successors(m, l))
            for p2 in a.successors(p, l):
                if (p2, m2) not in letter_pos:
                    letter_pos[(p2, m2)] = game.add_position(ODD)
                    todo.append((p2, m2))
                prio = 2 if mon_alpha else 1 if a.mark_of(p, l, p2) is ALPHA else 0
                game.add_edge(c, letter_pos[(p2, m2)], prio)
    return game, letter_pos, choice_pos


def gfg_verify(a: TncwAutomaton, replay: int = REPLAY_LASSOS, seed: int = 0) -> GfgStrategy | Refusal:
    monitor = determinize_breakpoint(a).automaton
    game, letter_pos, choice_pos = letter_game(a, monitor)
    sol = solve(game)
    start = letter_pos[(a.initial, monitor.initial)]
    if sol.winner(start) != EVEN:
        return Refusal("the letter picker wins the letter game: nondeterminism cannot be resolved from the past")
    moves = {}
    for (p, m, l), c in choice_pos.items():
        if c in sol.winning[EVEN]:
            moves[(p, m, l)] = a.successors(p, l)[sol.strategy[EVEN][c]]
    # off-region positions are never visited from the start, keep the table total anyway
    for (p, m, l), c in choice_pos.items():
        moves.setdefault((p, m, l), a.successors(p, l)[0])
    strategy = GfgStrategy(a, monitor, moves)
    if not strategy.consistent():
        raise AssertionError("strategy picked a non-transition")
    for w in random_lassos(len(a.alphabet), replay, seed):
        if lasso_member(a, a.initial, w) and not strategy.accepts(w):
            raise AssertionError(f"strategy replay rejects {w.render(a.alphabet)} although it is in the language")
    return strategy


def dbp_check(a: TncwAutomaton, bound: int = DBP_BOUND) -> TncwAutomaton | Refusal:
    """First (in canonical order) deterministic pruning of ``a`` equivalent to it."""
    cells = [(q, l) for q in a.states for l in a.letters]
    options = [a.successors(q, l) for q, l in cells]
    total = math.prod(len(o) for o in options)
    if total > bound:
        raise BoundExceeded(f"{total} prunings exceed the bound {bound}")
    for pick in itertools.product(*options):
        trs = frozenset(
            Transition(q, l, d, a.mark_of(q, l, d)) for (q, l), d in zip(cells, pick)
        )
        pruned = TncwAutomaton(a.alphabet, a.num_states, a.initial, trs, a.name)
        if language_equiv(pruned, a):
            return pruned
    return Refusal(f"none of the {total} prunings is equivalent")


def all_lassos(alphabet_size: int, max_u: int, max_v: int) -> Iterator[LassoWord]:
    """All lassos with ``|u| <= max_u`` and ``1 <= |v| <= max_v``, shortest prefix first."""
    letters = range(alphabet_size)
    for lu in range(max_u + 1):
        for lv in range(1, max_v + 1):
            for u in itertools.product(letters, repeat=lu):
                for v in itertools.product(letters, repeat=lv):
                    yield LassoWord(u, v)


def lasso_equiv_bounded(a: TncwAutomaton, b: TncwAutomaton, max_u: int, max_v: int) -> LassoWord | None:
    """First lasso on which ``a`` and ``b`` disagree, or None."""
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabet mismatch: {a.alphabet} vs {b.alphabet}")
    for w in all_lassos(len(a.alphabet), max_u, max_v):
        if lasso_member(a, a.initial, w) != lasso_member(b, b.initial, w):
            return w
    return None


def _canonical_bfs(succ: list[list[int]]) -> bool:
    order = [0]
    seen = {0}
    for q in order:
        for d in succ[q]:
            if d not in seen:
                if d != len(order):
                    return False
                seen.add(d)
                order.append(d)
    return len(order) == len(succ)


def _best_marking(succ, ref, ref_initial):
    """Largest alpha set under which ``succ`` can match the reference tDCW ``ref``.

    Transitions of ``succ`` on a reachable product cycle along which ``ref``
    stays non-alpha must be non-alpha; every other transition may be alpha,
    and more alpha only shrinks the language.  Returns the marks, or None if
    even this marking accepts a word ``ref`` rejects.
    """
    k = len(succ[0])
    index = {(0, ref_initial): 0}
    nodes = [(0, ref_initial)]
    edges = []
    for b, d in nodes:
        out = []
        for l in range(k):
            key = (succ[b][l], ref[d][l][0])
            if key not in index:
                index[key] = len(nodes)
                nodes.append(key)
            out.append((index[key], l, ref[d][l][1]))
        edges.append(out)
    safe_ref = sccs(range(len(nodes)), lambda v: [w for w, _, ra in edges[v] if not ra])
    comp = {v: i for i, c in enumerate(safe_ref) for v in c}
    keep = set()
    for v, out in enumerate(edges):
        for w, l, ra in out:
            if not ra and comp[w] == comp[v]:
                keep.add((nodes[v][0], l))
    marks = [[(b, l) not in keep for l in range(k)] for b in range(len(succ))]
    safe_b = sccs(range(len(nodes)), lambda v: [w for w, l, _ in edges[v] if not marks[nodes[v][0]][l]])
    comp = {v: i for i, c in enumerate(safe_b) for v in c}
    for v, out in enumerate(edges):
        for w, l, ra in out:
            if ra and not marks[nodes[v][0]][l] and comp[w] == comp[v]:
                return None
    return marks


def min_tdcw_search_bounded(a: TncwAutomaton, max_states: int = 3, limit: int = SEARCH_LIMIT) -> TncwAutomaton | None:
    """Smallest tDCW equivalent to ``a`` with at most ``max_states`` states.

    Candidates are total deterministic transition functions numbered in
    breadth-first order.  Each state of an equivalent tDCW reached by a word
    ``u`` recognizes the residual of the language after ``u``, so candidate
    successors are restricted to states labeled with the right residual.  For
    each surviving graph only the most-alpha admissible marking needs testing,
    and every hit is confirmed by :func:`language_equiv`.
    """
    ref = a if a.is_deterministic() else determinize_breakpoint(a).automaton
    ref = restrict(ref, reachable_states(ref))
    rel = compute_relations(ref)
    classes = rel.classes()
    cls_of = [0] * ref.num_states
    for i, c in enumerate(classes):
        for q in c:
            cls_of[q] = i
    k = len(ref.alphabet)
    residual = [[cls_of[ref.successors(c[0], l)[0]] for l in range(k)] for c in classes]
    table = [[(ref.successors(q, l)[0], bool(ref.alpha_successors(q, l))) for l in range(k)] for q in ref.states]
    start_cls = cls_of[ref.initial]

    for n in range(1, max_states + 1):
        if len(classes) > n:
            continue
        plans = []
        total = 0
        for rest in itertools.product(range(len(classes)), repeat=n - 1):
            lab = (start_cls,) + rest
            if len(set(lab)) != len(classes):
                continue
            options = [[b2 for b2 in range(n) if lab[b2] == residual[lab[b]][l]] for b in range(n) for l in range(k)]
            count = math.prod(len(o) for o in options)
            if count:
                plans.append(options)
                total += count
        if total > limit:
            raise BoundExceeded(f"{total} candidate graphs with {n} states exceed the limit {limit}")
        for options in plans:
            for pick in itertools.product(*options):
                succ = [list(pick[b * k:(b + 1) * k]) for b in range(n)]
                if not _canonical_bfs(succ):
                    continue
                marks = _best_marking(succ, table, ref.initial)
                if marks is None:
                    continue
                trs = frozenset(
                    Transition(b, l, succ[b][l], ALPHA if marks[b][l] else NONALPHA) for b in range(n) for l in range(k)
                )
                cand = TncwAutomaton(a.alphabet, n, 0, trs, f"min-tdcw-{n}")
                if language_equiv(cand, a):
                    return cand
    return None
