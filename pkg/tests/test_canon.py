import random

import pytest
from hypothesis import given, settings

from gfgcanon import fixtures
from gfgcanon.automaton import TncwAutomaton, Transition, make_automaton, renumber
from gfgcanon.canon import (
    Flavor,
    allowed,
    allowed_triples,
    canonical_form,
    is_alpha_maximal,
    is_alpha_maximal_up_to_homogeneity,
    saturate_homogeneous,
    saturate_max,
)
from gfgcanon.generate import permute, random_tdcw
from gfgcanon.iso import isomorphic
from gfgcanon.minimize import NotNiceError, minimize
from gfgcanon.semantics import compute_relations, cross_relations, language_equiv
from gfgcanon.structure import is_alpha_homogeneous

from support import deterministic_automata, non_gfg


def nonalpha(a):
    return {t for t in a.transitions if not t.alpha}


def test_existing_transitions_are_allowed():
    a = fixtures.load("fig7")
    rel = compute_relations(a)
    assert all(allowed(a, rel, t.src, t.letter, t.dst) for t in a.transitions)


def test_removed_edge_is_allowed_again():
    c1 = fixtures.load("fig5c1")
    assert 0 not in c1.successors(0, 2)
    assert allowed(c1, compute_relations(c1), 0, 2, 0)


def test_single_state_allows_every_letter():
    a = make_automaton("abc", 1, 0, [(0, s, 0) for s in "abc"])
    assert allowed_triples(a, compute_relations(a)) == {(0, l, 0) for l in range(3)}


def test_fig4_saturates_to_fig7():
    s = saturate_max(fixtures.load("fig4"))
    assert isomorphic(s, fixtures.load("fig7"))
    assert is_alpha_maximal(s)


def test_fig7_is_alpha_maximal_and_fixed():
    a = fixtures.load("fig7")
    assert is_alpha_maximal(a)
    assert saturate_max(a) is a


def test_fig5c1_is_neither_kind_of_maximal():
    c1 = fixtures.load("fig5c1")
    assert not is_alpha_maximal(c1)
    assert not is_alpha_maximal_up_to_homogeneity(c1)


def test_homogeneous_saturation_restores_fig4():
    assert saturate_homogeneous(fixtures.load("fig5c1")) == fixtures.load("fig4").with_name("fig5c1")


def test_minimized_fig2_is_a_homogeneous_fixpoint():
    c = minimize(fixtures.load("fig2"))
    assert saturate_homogeneous(c) == c
    assert is_alpha_maximal_up_to_homogeneity(c)


def test_rejections():
    with pytest.raises(NotNiceError):
        saturate_homogeneous(fixtures.load("fig7"))
    with pytest.raises(NotNiceError):
        saturate_max(make_automaton("a", 2, 0, [(0, "a", 0), (1, "a", 0)]))


def test_fig5_pair_canonizes_to_isomorphic_automata():
    for flavor in Flavor:
        x = canonical_form(fixtures.load("fig5c1"), flavor)
        y = canonical_form(fixtures.load("fig5c2"), flavor)
        assert isomorphic(x, y)


def test_canonical_form_propagates_errors():
    with pytest.raises(NotNiceError):
        canonical_form(non_gfg())


@settings(max_examples=50, deadline=None)
@given(deterministic_automata(max_states=5))
def test_saturation_laws(a):
    c = minimize(a)
    s_max = saturate_max(c)
    s_hom = saturate_homogeneous(c)
    for s in (s_max, s_hom):
        assert language_equiv(c, s)
        assert nonalpha(s) == nonalpha(c)
        rel, off = cross_relations(c, s)
        for q in c.states:
            assert rel.strongly_equiv[q, off + q]
    assert is_alpha_maximal(s_max)
    assert is_alpha_homogeneous(s_hom) and is_alpha_maximal_up_to_homogeneity(s_hom)
    assert saturate_max(s_max) == s_max
    assert saturate_homogeneous(s_hom) == s_hom
    assert saturate_max(s_hom) == s_max


@settings(max_examples=50, deadline=None)
@given(deterministic_automata(max_states=5))
def test_saturation_commutes_with_renumbering(a):
    c = minimize(a)
    perm = list(reversed(range(c.num_states)))
    assert saturate_max(renumber(c, perm)) == renumber(saturate_max(c), perm)


@settings(max_examples=50, deadline=None)
@given(deterministic_automata(max_states=5))
def test_pruned_corollary_on_saturation(a):
    c = minimize(a)
    s = saturate_max(c)
    rel, off = cross_relations(c, s)
    rc = compute_relations(c)
    for q in c.states:
        for r in s.states:
            if not rel.equiv[q, off + r]:
                continue
            for l in c.letters:
                for q2 in c.successors(q, l):
                    for r2 in s.successors(r, l):
                        assert rc.equiv[q2, r2]


@settings(max_examples=50, deadline=None)
@given(deterministic_automata(max_states=5))
def test_canonical_form_is_renaming_invariant(a):
    b = permute(a, 3)
    for flavor in Flavor:
        assert isomorphic(canonical_form(a, flavor), canonical_form(b, flavor))


def equivalent_prunings(c, seed, tries=60):
    """Distinct deterministic prunings of ``c`` that keep its language."""
    rng = random.Random(seed)
    found = []
    for _ in range(tries):
        pick = {
            (q, l): c.safe_successors(q, l)[0] if c.safe_successors(q, l) else rng.choice(c.successors(q, l))
            for q in c.states
            for l in c.letters
        }
        d = TncwAutomaton(
            c.alphabet, c.num_states, c.initial,
            frozenset(Transition(q, l, p, c.mark_of(q, l, p)) for (q, l), p in pick.items()),
        )
        if d not in found and language_equiv(d, c):
            found.append(d)
    return found


def pruning_source(seed):
    return saturate_max(minimize(random_tdcw(6, 2, seed, 0.5)))


@pytest.mark.parametrize("seed", range(60))
def test_equivalent_prunings_canonize_to_isomorphic_automata(seed):
    prunings = equivalent_prunings(pruning_source(seed), seed)
    assert prunings
    for flavor in Flavor:
        reference = canonical_form(prunings[0], flavor)
        for d in prunings[1:]:
            assert isomorphic(reference, canonical_form(d, flavor))


def test_pruning_pairs_are_not_all_trivial():
    assert sum(len(equivalent_prunings(pruning_source(s), s)) > 1 for s in range(60)) >= 5
