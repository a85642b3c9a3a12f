"""Exact language-level decisions: lasso membership, breakpoint determinization,
containment of deterministic automata, and the state relations

* ``equiv``          L(q) = L(s)
* ``safe_contained`` L_safe(q) ⊆ L_safe(s)
* ``strongly_equiv`` equiv and safe languages equal
* ``subsafe``        equiv and safe language of q contained in that of s
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .automaton import ALPHA, NONALPHA, LassoWord, TncwAutomaton, Transition, disjoint_union
from .structure import sccs


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _step(table, states: int, letter: int) -> int:
    out = 0
    for q in _bits(states):
        out |= table[q][letter]
    return out


def lasso_member(a: TncwAutomaton, q: int, word: LassoWord) -> bool:
    """Whether ``prefix . period^omega`` is accepted from state ``q``.

    Every cycle of the product of ``a`` with the lasso shape passes through the
    first period position, so it suffices to find a state ``p`` reachable there
    that returns to itself through one or more periods using only non-alpha
    transitions.
    """
    k = len(a.alphabet)
    if any(not 0 <= l < k for l in word.prefix + word.period):
        raise ValueError(f"lasso uses letters outside alphabet of size {k}")
    every, safe = a.masks[0], a.masks[1]
    cur = 1 << q
    for l in word.prefix:
        cur = _step(every, cur, l)
    reach = frontier = cur
    while frontier:
        nxt = frontier
        for l in word.period:
            nxt = _step(every, nxt, l)
        frontier = nxt & ~reach
        reach |= frontier
    one_period = [0] * a.num_states
    for p in a.states:
        m = 1 << p
        for l in word.period:
            m = _step(safe, m, l)
            if not m:
                break
        one_period[p] = m
    for p in _bits(reach):
        seen = one_period[p]
        todo = seen
        while todo and not seen >> p & 1:
            nxt = 0
            for r in _bits(todo):
                nxt |= one_period[r]
            todo = nxt & ~seen
            seen |= nxt
        if seen >> p & 1:
            return True
    return False


@dataclass(frozen=True)
class BreakpointAutomaton:
    """Deterministic co-Büchi automaton over pairs ``(S, O)`` of source state sets.

    ``O`` collects the runs that stayed non-alpha since the last breakpoint; a
    transition is alpha exactly when ``O`` becomes empty.  ``roots[q]`` is the
    index of the state rooted at ``({q}, {})``.
    """

    automaton: TncwAutomaton
    labels: tuple[tuple[frozenset[int], frozenset[int]], ...]
    roots: dict[int, int]


def determinize_breakpoint(a: TncwAutomaton, roots: Sequence[int] | None = None) -> BreakpointAutomaton:
    roots = [a.initial] if roots is None else list(roots)
    every, safe = a.masks[0], a.masks[1]
    index: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []
    for r in roots:
        key = (1 << r, 0)
        if key not in index:
            index[key] = len(order)
            order.append(key)
    trs = []
    i = 0
    while i < len(order):
        S, O = order[i]
        for l in a.letters:
            S2 = _step(every, S, l)
            O2 = _step(safe, O if O else S, l)
            key = (S2, O2)
            if key not in index:
                index[key] = len(order)
                order.append(key)
            trs.append(Transition(i, l, index[key], NONALPHA if O2 else ALPHA))
        i += 1
    root_idx = {r: index[(1 << r, 0)] for r in roots}
    d = TncwAutomaton(a.alphabet, len(order), root_idx[roots[0]] if roots else 0, frozenset(trs), a.name)
    labels = tuple((frozenset(_bits(S)), frozenset(_bits(O))) for S, O in order)
    return BreakpointAutomaton(d, labels, root_idx)


def _det_table(d: TncwAutomaton) -> list[list[tuple[int, bool]]]:
    table = []
    for q in d.states:
        row = []
        for l in d.letters:
            succ = d.successors(q, l)
            if len(succ) != 1:
                raise ValueError(f"automaton is not deterministic at ({q}, {d.alphabet[l]})")
            row.append((succ[0], bool(d.alpha_successors(q, l))))
        table.append(row)
    return table


def _uncontained(t1, t2, letters: range, starts) -> set[tuple[int, int]]:
    """Product nodes from which some word is accepted via ``t1`` but rejected via ``t2``.

    A counterexample is a reachable product cycle with no alpha step on the
    first side and at least one on the second.
    """
    index: dict[tuple[int, int], int] = {}
    nodes: list[tuple[int, int]] = []
    for s in starts:
        if s not in index:
            index[s] = len(nodes)
            nodes.append(s)
    edges: list[list[tuple[int, bool, bool]]] = []
    i = 0
    while i < len(nodes):
        x, y = nodes[i]
        out = []
        for l in letters:
            x2, m1 = t1[x][l]
            y2, m2 = t2[y][l]
            key = (x2, y2)
            if key not in index:
                index[key] = len(nodes)
                nodes.append(key)
            out.append((index[key], m1, m2))
        edges.append(out)
        i += 1
    comps = sccs(range(len(nodes)), lambda v: [w for w, m1, _ in edges[v] if not m1])
    comp_of = [0] * len(nodes)
    for ci, c in enumerate(comps):
        for v in c:
            comp_of[v] = ci
    bad_comps = {comp_of[v] for v in range(len(nodes)) for w, m1, m2 in edges[v] if not m1 and m2 and comp_of[w] == comp_of[v]}
    preds: list[list[int]] = [[] for _ in nodes]
    for v, out in enumerate(edges):
        for w, _, _ in out:
            preds[w].append(v)
    bad = [comp_of[v] in bad_comps for v in range(len(nodes))]
    queue = deque(v for v in range(len(nodes)) if bad[v])
    while queue:
        w = queue.popleft()
        for v in preds[w]:
            if not bad[v]:
                bad[v] = True
                queue.append(v)
    return {nodes[v] for v in range(len(nodes)) if bad[v]}


def det_contains(d1: TncwAutomaton, q: int, d2: TncwAutomaton, s: int) -> bool:
    """L(d1 from q) ⊆ L(d2 from s) for deterministic total automata."""
    if d1.alphabet != d2.alphabet:
        raise ValueError(f"alphabet mismatch: {d1.alphabet} vs {d2.alphabet}")
    return (q, s) not in _uncontained(_det_table(d1), _det_table(d2), d1.letters, [(q, s)])


def containment_table(d: TncwAutomaton, roots: Sequence[int]) -> np.ndarray:
    """``T[i, j]`` iff L(d from roots[i]) ⊆ L(d from roots[j]); one product pass."""
    t = _det_table(d)
    starts = [(r, s) for r in roots for s in roots]
    bad = _uncontained(t, t, d.letters, starts)
    out = np.array([[(r, s) not in bad for s in roots] for r in roots], dtype=bool).reshape(len(roots), len(roots))
    return out


def live_safe_states(a: TncwAutomaton) -> int:
    """Bit set of states with a non-empty safe language."""
    succ = lambda q: [d for l in a.letters for d in a.safe_successors(q, l)]  # noqa: E731
    comps = sccs(a.states, succ)
    live = 0
    for c in comps:
        members = set(c)
        if any(d in members for q in c for d in succ(q)):
            for q in c:
                live |= 1 << q
    changed = True
    while changed:
        changed = False
        for q in a.states:
            if not live >> q & 1 and any(live >> d & 1 for d in succ(q)):
                live |= 1 << q
                changed = True
    return live


def safe_containment_table(a: TncwAutomaton) -> np.ndarray:
    """``T[q, s]`` iff L_safe(q) ⊆ L_safe(s).

    Dead states (empty safe language) are trimmed; the remaining safety
    automaton is subset-constructed on the fly, and containment fails iff some
    finite word keeps q's subset non-empty while s's subset dies.
    """
    live = live_safe_states(a)
    safe = [[m & live for m in row] for row in a.masks[1]]
    n = a.num_states
    out = np.zeros((n, n), dtype=bool)
    for q in a.states:
        for s in a.states:
            if not live >> q & 1:
                out[q, s] = True
            elif not live >> s & 1:
                out[q, s] = False
            else:
                out[q, s] = _safe_contains(safe, a.letters, 1 << q, 1 << s)
    return out


def _safe_contains(safe, letters, X: int, Y: int) -> bool:
    seen = {(X, Y)}
    queue = deque(seen)
    while queue:
        X, Y = queue.popleft()
        for l in letters:
            X2 = _step(safe, X, l)
            if not X2:
                continue
            Y2 = _step(safe, Y, l)
            if not Y2:
                return False
            if (X2, Y2) not in seen:
                seen.add((X2, Y2))
                queue.append((X2, Y2))
    return True


@dataclass(frozen=True, eq=False)
class EquivRelations:
    equiv: np.ndarray
    safe_contained: np.ndarray

    @property
    def strongly_equiv(self) -> np.ndarray:
        return self.equiv & self.safe_contained & self.safe_contained.T

    @property
    def subsafe(self) -> np.ndarray:
        return self.equiv & self.safe_contained

    def classes(self, table: np.ndarray | None = None) -> list[list[int]]:
        """Equivalence classes of ``table`` (default ``equiv``), ordered by least member."""
        table = self.equiv if table is None else table
        seen: set[int] = set()
        out = []
        for q in range(table.shape[0]):
            if q not in seen:
                cls = [s for s in range(table.shape[0]) if table[q, s]]
                seen.update(cls)
                out.append(cls)
        return out


@lru_cache(maxsize=1024)
def compute_relations(a: TncwAutomaton) -> EquivRelations:
    d = determinize_breakpoint(a, roots=list(a.states))
    contained = containment_table(d.automaton, [d.roots[q] for q in a.states])
    equiv = contained & contained.T
    sc = safe_containment_table(a)
    equiv.setflags(write=False)
    sc.setflags(write=False)
    return EquivRelations(equiv, sc)


def cross_relations(a: TncwAutomaton, b: TncwAutomaton) -> tuple[EquivRelations, int]:
    """Relations over the disjoint union of ``a`` and ``b`` and the offset of ``b``."""
    u, off = disjoint_union(a, b)
    return compute_relations(u), off


def language_contains(a: TncwAutomaton, b: TncwAutomaton) -> bool:
    """L(a) ⊆ L(b)."""
    u, off = disjoint_union(a, b)
    d = determinize_breakpoint(u, roots=[a.initial, off + b.initial])
    r = d.roots
    return det_contains(d.automaton, r[a.initial], d.automaton, r[off + b.initial])


def language_equiv(a: TncwAutomaton, b: TncwAutomaton) -> bool:
    u, off = disjoint_union(a, b)
    d = determinize_breakpoint(u, roots=[a.initial, off + b.initial])
    table = containment_table(d.automaton, [d.roots[a.initial], d.roots[off + b.initial]])
    return bool(table.all())
