"""Isomorphism and safe isomorphism of tNCWs.

A bijection respects non-alpha transitions when ``q' ∈ δ^ᾱ(q, σ)`` iff
``κ(q') ∈ δ^ᾱ(κ(q), σ)``, and analogously for alpha transitions.  Initial
states play no role.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .automaton import Refusal, TncwAutomaton
from .semantics import cross_relations
from .structure import safe_components


@dataclass(frozen=True)
class IsoWitness:
    """State bijection with respect flags recomputed from both automata."""

    map: tuple[int, ...]
    respects_nonalpha: bool
    respects_alpha: bool

    @classmethod
    def check(cls, a: TncwAutomaton, b: TncwAutomaton, kappa) -> "IsoWitness":
        kappa = tuple(kappa)
        if sorted(kappa) != list(b.states) or len(kappa) != a.num_states:
            raise ValueError("map is not a bijection between the state sets")
        return cls(kappa, _respects(a, b, kappa, alpha=False), _respects(a, b, kappa, alpha=True))

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.map)
        for q, s in enumerate(self.map):
            inv[s] = q
        return tuple(inv)

    def to_json(self) -> dict:
        return {
            "map": {str(q): s for q, s in enumerate(self.map)},
            "respects_nonalpha": self.respects_nonalpha,
            "respects_alpha": self.respects_alpha,
        }


def _edges(a: TncwAutomaton, alpha: bool) -> set[tuple[int, int, int]]:
    return {(t.src, t.letter, t.dst) for t in a.transitions if t.alpha == alpha}


def _respects(a: TncwAutomaton, b: TncwAutomaton, kappa, alpha: bool) -> bool:
    return {(kappa[q], l, kappa[d]) for q, l, d in _edges(a, alpha)} == _edges(b, alpha)


def _profile(a: TncwAutomaton, q: int, comp_size: int, with_alpha: bool) -> tuple:
    safe_in = Counter(t.letter for t in a.transitions if t.dst == q and not t.alpha)
    prof = (
        comp_size,
        tuple(len(a.safe_successors(q, l)) for l in a.letters),
        tuple(safe_in[l] for l in a.letters),
        tuple(q in a.safe_successors(q, l) for l in a.letters),
    )
    if with_alpha:
        alpha_in = Counter(t.letter for t in a.transitions if t.dst == q and t.alpha)
        prof += (
            tuple(len(a.alpha_successors(q, l)) for l in a.letters),
            tuple(alpha_in[l] for l in a.letters),
            tuple(q in a.alpha_successors(q, l) for l in a.letters),
        )
    return prof


def _search(a: TncwAutomaton, b: TncwAutomaton, with_alpha: bool) -> Iterator[tuple[int, ...]]:
    """Backtracking over bijections that agree on profiles and on every edge between assigned states."""
    ca, cb = safe_components(a), safe_components(b)
    pa = [_profile(a, q, len(ca.components[ca.component_of[q]]), with_alpha) for q in a.states]
    pb = [_profile(b, s, len(cb.components[cb.component_of[s]]), with_alpha) for s in b.states]
    cand = [[s for s in b.states if pb[s] == pa[q]] for q in a.states]
    # visit states in safe-graph order so neighbours get pinned early
    order = []
    seen = set()
    for start in sorted(a.states, key=lambda q: len(cand[q])):
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        while stack:
            q = stack.pop()
            order.append(q)
            for l in a.letters:
                for d in a.successors(q, l):
                    if d not in seen:
                        seen.add(d)
                        stack.append(d)
    ea = {m: _edges(a, m) for m in (False, True)}
    eb = {m: _edges(b, m) for m in (False, True)}
    marks = (False, True) if with_alpha else (False,)
    kappa: dict[int, int] = {}
    used: set[int] = set()

    def fits(q: int, s: int) -> bool:
        for p, r in list(kappa.items()) + [(q, s)]:
            for l in a.letters:
                for m in marks:
                    if ((q, l, p) in ea[m]) != ((s, l, r) in eb[m]):
                        return False
                    if ((p, l, q) in ea[m]) != ((r, l, s) in eb[m]):
                        return False
        return True

    def go(i: int):
        if i == len(order):
            yield tuple(kappa[q] for q in a.states)
            return
        q = order[i]
        for s in cand[q]:
            if s in used or not fits(q, s):
                continue
            kappa[q] = s
            used.add(s)
            yield from go(i + 1)
            del kappa[q]
            used.discard(s)

    yield from go(0)


def _fast_candidate(a: TncwAutomaton, b: TncwAutomaton) -> tuple[int, ...] | None:
    """The bijection pairing strongly-equivalent states, when that pairing is one-to-one."""
    rel, off = cross_relations(a, b)
    se = rel.strongly_equiv
    kappa = []
    for q in a.states:
        partners = [s for s in b.states if se[q, s + off]]
        if len(partners) != 1:
            return None
        kappa.append(partners[0])
    return tuple(kappa) if len(set(kappa)) == len(kappa) else None


def _precheck(a: TncwAutomaton, b: TncwAutomaton) -> Refusal | None:
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabet mismatch: {a.alphabet} vs {b.alphabet}")
    if a.num_states != b.num_states:
        return Refusal(f"state counts differ: {a.num_states} vs {b.num_states}")
    sa, sb = sorted(safe_components(a).sizes), sorted(safe_components(b).sizes)
    if sa != sb:
        return Refusal(f"safe component sizes differ: {sa} vs {sb}")
    if sum(not t.alpha for t in a.transitions) != sum(not t.alpha for t in b.transitions):
        return Refusal("numbers of non-alpha transitions differ")
    return None


def safe_isomorphic(a: TncwAutomaton, b: TncwAutomaton, fast: bool = True) -> IsoWitness | Refusal:
    refusal = _precheck(a, b)
    if refusal is not None:
        return refusal
    if fast:
        kappa = _fast_candidate(a, b)
        if kappa is not None:
            w = IsoWitness.check(a, b, kappa)
            if w.respects_nonalpha:
                return w
    for kappa in _search(a, b, with_alpha=False):
        return IsoWitness.check(a, b, kappa)
    return Refusal("no bijection respects the non-alpha transitions (search exhausted)")


def isomorphic(a: TncwAutomaton, b: TncwAutomaton, fast: bool = True) -> IsoWitness | Refusal:
    refusal = _precheck(a, b)
    if refusal is not None:
        return refusal
    if len(a.transitions) != len(b.transitions):
        return Refusal("numbers of alpha transitions differ")
    if fast:
        kappa = _fast_candidate(a, b)
        if kappa is not None:
            w = IsoWitness.check(a, b, kappa)
            if w.respects_nonalpha and w.respects_alpha:
                return w
    for kappa in _search(a, b, with_alpha=True):
        return IsoWitness.check(a, b, kappa)
    if safe_isomorphic(a, b, fast=fast):
        return Refusal("safe isomorphic, but no such bijection respects the alpha transitions")
    return Refusal("no bijection respects the non-alpha transitions (search exhausted)")
