import itertools

from hypothesis import given
from hypothesis import strategies as st

from gfgcanon import fixtures
from gfgcanon.automaton import make_automaton
from gfgcanon.semantics import compute_relations, language_equiv
from gfgcanon.structure import (
    crossing_transitions,
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

from support import automata, deterministic_automata


def closure(n, edges):
    reach = [[i == j or (i, j) in edges for j in range(n)] for i in range(n)]
    for k, i, j in itertools.product(range(n), repeat=3):
        if reach[i][k] and reach[k][j]:
            reach[i][j] = True
    return reach


def test_single_vertex():
    assert sccs([0], lambda v: []) == [[0]]


def test_three_cycle():
    assert sccs([0, 1, 2], {0: [1], 1: [2], 2: [0]}) == [[0, 1, 2]]


def test_sinks_come_first_and_ergodic():
    succ = {0: [1], 1: [2], 2: [1]}
    comps = sccs([0, 1, 2], succ)
    assert comps == [[1, 2], [0]]
    assert ergodic(comps, succ.__getitem__) == [0]


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_sccs_match_transitive_closure(graph):
    n, edges = graph
    succ = {v: sorted(w for u, w in edges if u == v) for v in range(n)}
    comps = sccs(range(n), succ)
    assert sorted(v for c in comps for v in c) == list(range(n))
    reach = closure(n, edges)
    where = {v: i for i, c in enumerate(comps) for v in c}
    for u, v in itertools.product(range(n), repeat=2):
        assert (where[u] == where[v]) == (reach[u][v] and reach[v][u])
    # reverse topological: edges never go to a later component
    for u, v in edges:
        assert where[v] <= where[u]


def test_fig2_safe_components():
    comps = safe_components(fixtures.load("fig2"))
    assert set(comps.components) == {frozenset({0, 1}), frozenset({2})}
    assert comps.same(0, 1) and not comps.same(0, 2)
    assert sorted(comps.sizes) == [1, 2]


def test_all_alpha_gives_singletons():
    a = make_automaton("ab", 3, 0, [(q, s, (q + 1) % 3, "alpha") for q in range(3) for s in "ab"])
    assert sorted(safe_components(a).sizes) == [1, 1, 1]


def test_all_nonalpha_cycle_is_one_component():
    a = make_automaton("ab", 3, 0, [(q, s, (q + 1) % 3) for q in range(3) for s in "ab"])
    assert safe_components(a).sizes == (3,)


def test_normalize_remarks_crossing_edge():
    a = make_automaton("a", 2, 0, [(0, "a", 1), (1, "a", 1, "alpha")])
    assert not is_normal(a)
    assert len(crossing_transitions(a)) == 1
    b = normalize(a)
    assert b.mark_of(0, 0, 1).name == "ALPHA"
    assert is_normal(b)


def test_normalize_identity_on_normal_input():
    a = fixtures.load("fig2")
    assert normalize(a) is a


@given(automata(max_states=3))
def test_normalize_is_idempotent_and_preserves_language(a):
    b = normalize(a)
    assert is_normal(b)
    assert normalize(b) == b
    assert language_equiv(a, b)
    assert set(safe_components(a).components) == set(safe_components(b).components)


@given(deterministic_automata())
def test_deterministic_inputs_are_safe_and_semantically_deterministic(a):
    assert is_safe_deterministic(a)
    assert is_semantically_deterministic(a, compute_relations(a))


def test_fixture_predicates():
    fig4 = fixtures.load("fig4")
    assert is_alpha_homogeneous(fig4)
    assert is_safe_deterministic(fig4)
    assert is_semantically_deterministic(fig4, compute_relations(fig4))
    assert not is_alpha_homogeneous(fixtures.load("fig7"))
    assert is_reachable(fixtures.load("fig2"))


def test_semantic_nondeterminism_detected():
    # 0 -a-> {1, 2}: 1 accepts everything, 2 nothing
    a = make_automaton(
        "a", 3, 0, [(0, "a", 1, "alpha"), (0, "a", 2, "alpha"), (1, "a", 1), (2, "a", 2, "alpha")]
    )
    assert not is_semantically_deterministic(a, compute_relations(a))


def test_unreachable_state():
    a = make_automaton("a", 2, 0, [(0, "a", 0), (1, "a", 0)])
    assert not is_reachable(a)
