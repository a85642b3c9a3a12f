"""Alpha-saturation canonical forms.

A triple ``(q, σ, s)`` is allowed when ``s`` is language-equivalent to some
existing σ-successor of ``q``.  Adding allowed triples as alpha transitions
changes neither the language nor the safe language of any state.
"""
from __future__ import annotations

import enum

from .automaton import ALPHA, TncwAutomaton, Transition
from .minimize import NotNiceError, is_nice, minimize
from .semantics import EquivRelations, compute_relations
from .structure import is_alpha_homogeneous


class Flavor(enum.Enum):
    MAX = "max"
    HOMOGENEOUS = "homogeneous"


def allowed(a: TncwAutomaton, rel: EquivRelations, q: int, letter: int, s: int) -> bool:
    return any(rel.equiv[s, d] for d in a.successors(q, letter))


def allowed_triples(a: TncwAutomaton, rel: EquivRelations) -> set[tuple[int, int, int]]:
    eq = rel.equiv
    out = set()
    for q in a.states:
        for l in a.letters:
            succ = a.successors(q, l)
            out.update((q, l, s) for s in a.states if any(eq[s, d] for d in succ))
    return out


def _missing(a: TncwAutomaton, rel: EquivRelations, homogeneous_only: bool) -> set[Transition]:
    present = {(t.src, t.letter, t.dst) for t in a.transitions}
    extra = set()
    for q, l, s in allowed_triples(a, rel):
        if (q, l, s) in present:
            continue
        if homogeneous_only and a.safe_successors(q, l):
            continue
        extra.add(Transition(q, l, s, ALPHA))
    return extra


def _saturate(a: TncwAutomaton, rel: EquivRelations | None, homogeneous_only: bool) -> TncwAutomaton:
    rel = compute_relations(a) if rel is None else rel
    if not is_nice(a, rel):
        raise NotNiceError("nice", "saturation needs a reachable, normal, safe- and semantically deterministic input")
    extra = _missing(a, rel, homogeneous_only)
    if not extra:
        return a
    return TncwAutomaton(a.alphabet, a.num_states, a.initial, a.transitions | extra, a.name)


def saturate_max(a: TncwAutomaton, rel: EquivRelations | None = None) -> TncwAutomaton:
    """Add every allowed triple missing from ``a`` as an alpha transition."""
    return _saturate(a, rel, homogeneous_only=False)


def saturate_homogeneous(a: TncwAutomaton, rel: EquivRelations | None = None) -> TncwAutomaton:
    """Add allowed alpha transitions only where ``(q, σ)`` has no non-alpha transition."""
    if not is_alpha_homogeneous(a):
        raise NotNiceError("alpha-homogeneous")
    return _saturate(a, rel, homogeneous_only=True)


def canonical_form(a: TncwAutomaton, flavor: Flavor | str = Flavor.MAX) -> TncwAutomaton:
    """Minimize, then saturate; equivalent inputs give isomorphic outputs."""
    flavor = Flavor(flavor)
    c = minimize(a)
    if flavor is Flavor.MAX:
        return saturate_max(c)
    return saturate_homogeneous(c)


def is_alpha_maximal(a: TncwAutomaton, rel: EquivRelations | None = None) -> bool:
    rel = compute_relations(a) if rel is None else rel
    return not _missing(a, rel, homogeneous_only=False)


def is_alpha_maximal_up_to_homogeneity(a: TncwAutomaton, rel: EquivRelations | None = None) -> bool:
    rel = compute_relations(a) if rel is None else rel
    return is_alpha_homogeneous(a) and not _missing(a, rel, homogeneous_only=True)
