"""Graph-level analysis: SCCs, safe components, normalization, niceness predicates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping, Sequence, TypeVar

from .automaton import ALPHA, TncwAutomaton, Transition, reachable_states

V = TypeVar("V", bound=Hashable)


def sccs(vertices: Iterable[V], successors: Callable[[V], Iterable[V]] | Mapping[V, Iterable[V]]) -> list[list[V]]:
    """Strongly connected components, sinks first (reverse topological order).

    Iterative Tarjan; vertices are started in the given order and successors
    are explored in the order produced, so numbering is reproducible.
    """
    succ = successors.__getitem__ if isinstance(successors, Mapping) else successors
    index: dict[V, int] = {}
    low: dict[V, int] = {}
    on_stack: set[V] = set()
    stack: list[V] = []
    out: list[list[V]] = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ(root)))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
    return out


def ergodic(components: Sequence[Sequence[V]], successors: Callable[[V], Iterable[V]]) -> list[int]:
    """Indices of components with no edge leaving them."""
    where = {v: i for i, c in enumerate(components) for v in c}
    return [
        i for i, c in enumerate(components) if all(where[w] == i for v in c for w in successors(v) if w in where)
    ]


@dataclass(frozen=True)
class SafeDecomposition:
    components: tuple[frozenset[int], ...]
    component_of: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def same(self, q: int, s: int) -> bool:
        return self.component_of[q] == self.component_of[s]


def safe_graph(a: TncwAutomaton) -> Callable[[int], list[int]]:
    return lambda q: sorted({d for s in a.letters for d in a.safe_successors(q, s)})


def safe_components(a: TncwAutomaton) -> SafeDecomposition:
    comps = sccs(a.states, safe_graph(a))
    comp_of = [0] * a.num_states
    for i, c in enumerate(comps):
        for q in c:
            comp_of[q] = i
    return SafeDecomposition(tuple(frozenset(c) for c in comps), tuple(comp_of))


def normalize(a: TncwAutomaton) -> TncwAutomaton:
    """Re-mark as alpha every non-alpha transition crossing safe components."""
    dec = safe_components(a)
    trs = frozenset(
        t._replace(mark=ALPHA) if not t.alpha and not dec.same(t.src, t.dst) else t for t in a.transitions
    )
    if trs == a.transitions:
        return a
    return TncwAutomaton(a.alphabet, a.num_states, a.initial, trs, a.name)


def is_normal(a: TncwAutomaton) -> bool:
    dec = safe_components(a)
    return all(t.alpha or dec.same(t.src, t.dst) for t in a.transitions)


def is_safe_deterministic(a: TncwAutomaton) -> bool:
    return all(len(a.safe_successors(q, s)) <= 1 for q in a.states for s in a.letters)


def is_alpha_homogeneous(a: TncwAutomaton) -> bool:
    return all(not (a.safe_successors(q, s) and a.alpha_successors(q, s)) for q in a.states for s in a.letters)


def is_semantically_deterministic(a: TncwAutomaton, rel) -> bool:
    """All sigma-successors of every state are language-equivalent under ``rel``."""
    eq = rel.equiv
    for q in a.states:
        for s in a.letters:
            succ = a.successors(q, s)
            if any(not eq[succ[0], d] for d in succ[1:]):
                return False
    return True


def is_reachable(a: TncwAutomaton) -> bool:
    return len(reachable_states(a)) == a.num_states


def alpha_homogeneous_violations(a: TncwAutomaton) -> list[tuple[int, int]]:
    return [(q, s) for q in a.states for s in a.letters if a.safe_successors(q, s) and a.alpha_successors(q, s)]


def crossing_transitions(a: TncwAutomaton) -> list[Transition]:
    dec = safe_components(a)
    return [t for t in a.sorted_transitions if not t.alpha and not dec.same(t.src, t.dst)]
