"""Two-step minimization of nice GFG-tNCWs.

Step 1 (safe centralization) keeps only the safe components of a frontier of
the order H on components and redirects missing letters through alpha edges
into every equivalent retained state.  Step 2 (safe minimization) merges
strongly-equivalent states.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .automaton import ALPHA, TncwAutomaton, Transition, check_valid, reachable_states, restrict
from .semantics import EquivRelations, compute_relations
from .structure import (
    SafeDecomposition,
    ergodic,
    is_alpha_homogeneous,
    is_normal,
    is_reachable,
    is_safe_deterministic,
    is_semantically_deterministic,
    normalize,
    safe_components,
    sccs,
)


class NotNiceError(ValueError):
    """Input lacks a property the construction requires; ``prop`` names it."""

    def __init__(self, prop: str, detail: str = ""):
        self.prop = prop
        super().__init__(f"automaton is not {prop}" + (f": {detail}" if detail else ""))


@dataclass(frozen=True)
class FrontierPlan:
    components: SafeDecomposition
    H: np.ndarray
    frontier: tuple[int, ...] = ()
    chosen_initial: int = -1

    def retained_states(self) -> list[int]:
        return sorted(q for c in self.frontier for q in self.components.components[c])


@dataclass(frozen=True)
class QuotientMap:
    class_of: tuple[int, ...]
    representative: tuple[int, ...]


def niceify(a: TncwAutomaton, check_gfg: bool = True) -> TncwAutomaton:
    """Reachable part of ``a``, normalized.

    Accepts deterministic automata, and safe-deterministic, semantically
    deterministic automata whose every state passes the GFG game.  Anything else
    raises :class:`NotNiceError`.
    """
    check_valid(a)
    b = normalize(restrict(a, reachable_states(a)))
    if b.is_deterministic():
        return b
    if not is_safe_deterministic(b):
        raise NotNiceError("safe deterministic", "some state has two non-alpha successors on one letter")
    rel = compute_relations(b)
    if not is_semantically_deterministic(b, rel):
        raise NotNiceError("semantically deterministic", "some letter leads to inequivalent states")
    if check_gfg:
        from .oracle import gfg_verify

        for q in b.states:
            if not gfg_verify(b.with_initial(q)):
                raise NotNiceError("GFG", f"state {q} is not good-for-games")
    return b


def is_nice(a: TncwAutomaton, rel: EquivRelations | None = None) -> bool:
    """Syntactic niceness (reachable, normal, safe- and semantically deterministic).

    GFGness is not decided here; see :func:`gfgcanon.oracle.gfg_verify`.
    """
    rel = compute_relations(a) if rel is None else rel
    return is_reachable(a) and is_normal(a) and is_safe_deterministic(a) and is_semantically_deterministic(a, rel)


def compute_H(a: TncwAutomaton, rel: EquivRelations, dec: SafeDecomposition | None = None) -> FrontierPlan:
    dec = safe_components(a) if dec is None else dec
    m = len(dec.components)
    sub = rel.subsafe
    H = np.zeros((m, m), dtype=bool)
    for i, S in enumerate(dec.components):
        for j, T in enumerate(dec.components):
            H[i, j] = any(sub[q, s] for q in S for s in T)
    return FrontierPlan(dec, H)


def _h_sccs(H: np.ndarray) -> tuple[list[list[int]], list[int]]:
    succ = lambda i: [j for j in range(H.shape[0]) if H[i, j] and j != i]  # noqa: E731
    comps = sccs(range(H.shape[0]), succ)
    return comps, ergodic(comps, succ)


def is_frontier(H: np.ndarray, frontier: Sequence[int]) -> bool:
    covers = all(any(H[i, j] for j in frontier) for i in range(H.shape[0]))
    antichain = all(not H[i, j] for i in frontier for j in frontier if i != j)
    return covers and antichain and len(set(frontier)) == len(frontier)


def _initial_for(a: TncwAutomaton, rel: EquivRelations, plan: FrontierPlan, frontier: Sequence[int]) -> int:
    comps = plan.components
    if comps.component_of[a.initial] in frontier:
        return a.initial
    kept = sorted(q for c in frontier for q in comps.components[c])
    return next(q for q in kept if rel.subsafe[a.initial, q])


def choose_frontier(a: TncwAutomaton, plan: FrontierPlan, rel: EquivRelations) -> FrontierPlan:
    """One component per ergodic SCC of H: the one holding the least state."""
    comps, erg = _h_sccs(plan.H)
    dec = plan.components
    frontier = tuple(sorted(min(comps[e], key=lambda c: min(dec.components[c])) for e in erg))
    return FrontierPlan(dec, plan.H, frontier, _initial_for(a, rel, plan, frontier))


def admissible_frontiers(plan: FrontierPlan) -> Iterator[tuple[int, ...]]:
    """Every frontier: any one component from each ergodic SCC of H."""
    comps, erg = _h_sccs(plan.H)
    for pick in itertools.product(*(comps[e] for e in erg)):
        yield tuple(sorted(pick))


def build_frontier_automaton(a: TncwAutomaton, plan: FrontierPlan, rel: EquivRelations) -> TncwAutomaton:
    kept = plan.retained_states()
    keep = set(kept)
    eq = rel.equiv
    trs = set()
    for q in kept:
        for l in a.letters:
            safe = a.safe_successors(q, l)
            if safe:
                trs.update(Transition(q, l, d, t) for d, t in ((d, 0) for d in safe))
            else:
                targets = {p for p in kept if any(eq[p, d] for d in a.alpha_successors(q, l))}
                trs.update(Transition(q, l, p, ALPHA) for p in targets)
    out = TncwAutomaton(a.alphabet, a.num_states, plan.chosen_initial, frozenset(trs), a.name)
    assert all(t.dst in keep for t in trs)
    return restrict(out, kept)


def quotient_map(rel: EquivRelations) -> QuotientMap:
    classes = rel.classes(rel.strongly_equiv)
    class_of = [0] * rel.equiv.shape[0]
    for i, c in enumerate(classes):
        for q in c:
            class_of[q] = i
    return QuotientMap(tuple(class_of), tuple(c[0] for c in classes))


def quotient(b: TncwAutomaton, rel: EquivRelations) -> tuple[TncwAutomaton, QuotientMap]:
    if not is_alpha_homogeneous(b):
        raise NotNiceError("alpha-homogeneous")
    qm = quotient_map(rel)
    trs = frozenset(Transition(qm.class_of[t.src], t.letter, qm.class_of[t.dst], t.mark) for t in b.transitions)
    out = TncwAutomaton(b.alphabet, len(qm.representative), qm.class_of[b.initial], trs, b.name)
    return out, qm


def is_safe_centralized(a: TncwAutomaton, rel: EquivRelations) -> bool:
    dec = safe_components(a)
    sub = rel.subsafe
    return all(dec.same(q, s) for q in a.states for s in a.states if sub[q, s])


def is_safe_minimal(a: TncwAutomaton, rel: EquivRelations) -> bool:
    se = rel.strongly_equiv
    return not any(se[q, s] for q in a.states for s in a.states if q != s)


@dataclass(frozen=True)
class MinimizeTrace:
    nice: TncwAutomaton
    plan: FrontierPlan
    frontier_automaton: TncwAutomaton
    classes: QuotientMap
    result: TncwAutomaton
    relations: EquivRelations = field(repr=False, default=None)

    def to_json(self) -> dict:
        dec = self.plan.components
        return {
            "components": [sorted(c) for c in dec.components],
            "H": self.plan.H.astype(int).tolist(),
            "frontier": [sorted(dec.components[c]) for c in self.plan.frontier],
            "chosen_initial": self.plan.chosen_initial,
            "class_of": list(self.classes.class_of),
            "representative": list(self.classes.representative),
        }


def minimize_trace(a: TncwAutomaton, frontier: Sequence[int] | None = None) -> MinimizeTrace:
    """Run both steps, optionally with an explicit frontier (component indices of ``niceify(a)``)."""
    nice = niceify(a)
    rel = compute_relations(nice)
    plan = compute_H(nice, rel)
    if frontier is None:
        plan = choose_frontier(nice, plan, rel)
    else:
        frontier = tuple(sorted(frontier))
        if not is_frontier(plan.H, frontier):
            raise ValueError(f"{frontier} is not a frontier")
        plan = FrontierPlan(plan.components, plan.H, frontier, _initial_for(nice, rel, plan, frontier))
    b = build_frontier_automaton(nice, plan, rel)
    c, qm = quotient(b, compute_relations(b))
    return MinimizeTrace(nice, plan, b, qm, c, rel)


def minimize(a: TncwAutomaton, frontier: Sequence[int] | None = None) -> TncwAutomaton:
    return minimize_trace(a, frontier).result
