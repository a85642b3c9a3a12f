"""Transition-based co-Büchi automata: the value type every other module acts on.

States are dense integers ``0..num_states-1`` and letters are indices into the
alphabet tuple.  Acceptance marks live on transitions: a run is accepting iff it
traverses ALPHA-marked transitions only finitely often.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class Mark(enum.IntEnum):
    NONALPHA = 0
    ALPHA = 1


ALPHA = Mark.ALPHA
NONALPHA = Mark.NONALPHA


class Transition(NamedTuple):
    src: int
    letter: int
    dst: int
    mark: Mark = NONALPHA

    @property
    def alpha(self) -> bool:
        return self.mark is ALPHA


@dataclass(frozen=True)
class LassoWord:
    """The ultimately periodic word ``prefix . period^omega`` over letter indices."""

    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("lasso period must be non-empty")

    @classmethod
    def from_symbols(cls, alphabet: Sequence[str], prefix: Iterable[str], period: Iterable[str]) -> "LassoWord":
        index = {s: i for i, s in enumerate(alphabet)}
        try:
            return cls(tuple(index[s] for s in prefix), tuple(index[s] for s in period))
        except KeyError as e:
            raise ValueError(f"letter {e.args[0]!r} not in alphabet {tuple(alphabet)}") from None

    def render(self, alphabet: Sequence[str]) -> str:
        u = "".join(alphabet[i] for i in self.prefix) or "ε"
        v = "".join(alphabet[i] for i in self.period)
        return f"{u}·({v})^ω"


@dataclass(frozen=True)
class TncwAutomaton:
    """A tNCW ``<alphabet, states, initial, transitions>`` with marks on transitions.

    Instances are immutable; derived tables are computed lazily and cached.
    Construction does not check invariants, use :func:`validate` for that.
    """

    alphabet: tuple[str, ...]
    num_states: int
    initial: int
    transitions: frozenset[Transition]
    name: str = field(default="", compare=True)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(
            self, "transitions", frozenset(Transition(t[0], t[1], t[2], Mark(t[3])) for t in self.transitions)
        )

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.alphabet, self.num_states, self.initial, self.transitions, self.name))

    @property
    def states(self) -> range:
        return range(self.num_states)

    @property
    def letters(self) -> range:
        return range(len(self.alphabet))

    @cached_property
    def sorted_transitions(self) -> tuple[Transition, ...]:
        return tuple(sorted(self.transitions, key=lambda t: (t.src, t.letter, t.mark, t.dst)))

    @cached_property
    def _tables(self):
        n, k = self.num_states, len(self.alphabet)
        succ = [[[] for _ in range(k)] for _ in range(n)]
        safe = [[[] for _ in range(k)] for _ in range(n)]
        alpha = [[[] for _ in range(k)] for _ in range(n)]
        for t in self.sorted_transitions:
            if not (0 <= t.src < n and 0 <= t.dst < n and 0 <= t.letter < k):
                continue
            succ[t.src][t.letter].append(t.dst)
            (alpha if t.alpha else safe)[t.src][t.letter].append(t.dst)
        freeze = lambda tab: tuple(tuple(tuple(sorted(set(c))) for c in row) for row in tab)  # noqa: E731
        return freeze(succ), freeze(safe), freeze(alpha)

    def successors(self, q: int, letter: int) -> tuple[int, ...]:
        return self._tables[0][q][letter]

    def safe_successors(self, q: int, letter: int) -> tuple[int, ...]:
        return self._tables[1][q][letter]

    def alpha_successors(self, q: int, letter: int) -> tuple[int, ...]:
        return self._tables[2][q][letter]

    @cached_property
    def masks(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """``masks[kind][q][letter]`` as bit sets; kind 0 = all, 1 = safe, 2 = alpha."""
        return tuple(
            tuple(tuple(sum(1 << d for d in cell) for cell in row) for row in tab) for tab in self._tables
        )

    def is_deterministic(self) -> bool:
        return all(len(self.successors(q, s)) == 1 for q in self.states for s in self.letters)

    def mark_of(self, q: int, letter: int, dst: int) -> Mark | None:
        if dst in self.safe_successors(q, letter):
            return NONALPHA
        if dst in self.alpha_successors(q, letter):
            return ALPHA
        return None

    def with_initial(self, q: int) -> "TncwAutomaton":
        return TncwAutomaton(self.alphabet, self.num_states, q, self.transitions, self.name)

    def with_name(self, name: str) -> "TncwAutomaton":
        return TncwAutomaton(self.alphabet, self.num_states, self.initial, self.transitions, name)

    def letter_index(self, symbol: str) -> int:
        try:
            return self.alphabet.index(symbol)
        except ValueError:
            raise ValueError(f"letter {symbol!r} not in alphabet {self.alphabet}") from None

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<TncwAutomaton{label} |Q|={self.num_states} |Σ|={len(self.alphabet)} |Δ|={len(self.transitions)}>"


def make_automaton(
    alphabet: Sequence[str],
    num_states: int,
    initial: int,
    transitions: Iterable[tuple],
    name: str = "",
) -> TncwAutomaton:
    """Build an automaton from ``(src, letter, dst, mark)`` tuples.

    Letters may be given as symbols or indices; ``mark`` may be a bool, a
    :class:`Mark`, or the strings ``"alpha"``/``"nonalpha"``.
    """
    alphabet = tuple(alphabet)
    trs = []
    for t in transitions:
        src, letter, dst = t[0], t[1], t[2]
        mark = t[3] if len(t) > 3 else NONALPHA
        if isinstance(letter, str):
            letter = alphabet.index(letter)
        if isinstance(mark, str):
            mark = ALPHA if mark.lower() in ("alpha", "a", "1") else NONALPHA
        trs.append(Transition(src, letter, dst, Mark(int(mark))))
    return TncwAutomaton(alphabet, num_states, initial, frozenset(trs), name)


def validate(a: TncwAutomaton) -> list[str]:
    """Return human-readable invariant violations; empty iff ``a`` is well formed."""
    problems = []
    if not a.alphabet:
        problems.append("alphabet is empty")
    if len(set(a.alphabet)) != len(a.alphabet):
        problems.append(f"duplicate letters in alphabet {a.alphabet}")
    if a.num_states < 1:
        problems.append("automaton has no states")
    if not 0 <= a.initial < max(a.num_states, 0):
        problems.append(f"initial state {a.initial} out of range")
    marks: dict[tuple[int, int, int], set[Mark]] = {}
    for t in a.sorted_transitions:
        if not 0 <= t.src < a.num_states:
            problems.append(f"transition {tuple(t)}: source out of range")
        if not 0 <= t.dst < a.num_states:
            problems.append(f"transition {tuple(t)}: destination out of range")
        if not 0 <= t.letter < len(a.alphabet):
            problems.append(f"transition {tuple(t)}: letter out of range")
        marks.setdefault((t.src, t.letter, t.dst), set()).add(t.mark)
    for (q, s, d), ms in sorted(marks.items()):
        if len(ms) > 1:
            problems.append(f"transition ({q}, {a.alphabet[s] if s < len(a.alphabet) else s}, {d}) carries both marks")
    for q in a.states:
        for s in a.letters:
            if not a.successors(q, s):
                problems.append(f"missing successor ({q}, {a.alphabet[s]})")
    return problems


class InvalidAutomaton(ValueError):
    pass


def check_valid(a: TncwAutomaton) -> TncwAutomaton:
    problems = validate(a)
    if problems:
        raise InvalidAutomaton("; ".join(problems))
    return a


def disjoint_union(a: TncwAutomaton, b: TncwAutomaton) -> tuple[TncwAutomaton, int]:
    """Place ``b`` after ``a``; returns the union and the offset of ``b``'s states."""
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabet mismatch: {a.alphabet} vs {b.alphabet}")
    off = a.num_states
    trs = set(a.transitions)
    trs.update(Transition(t.src + off, t.letter, t.dst + off, t.mark) for t in b.transitions)
    return TncwAutomaton(a.alphabet, off + b.num_states, a.initial, frozenset(trs)), off


def restrict(a: TncwAutomaton, keep: Iterable[int], initial: int | None = None) -> TncwAutomaton:
    """Sub-automaton on ``keep`` (renumbered ascending); transitions leaving ``keep`` are dropped."""
    keep = sorted(set(keep))
    new = {q: i for i, q in enumerate(keep)}
    init = a.initial if initial is None else initial
    trs = frozenset(
        Transition(new[t.src], t.letter, new[t.dst], t.mark) for t in a.transitions if t.src in new and t.dst in new
    )
    return TncwAutomaton(a.alphabet, len(keep), new[init], trs, a.name)


def renumber(a: TncwAutomaton, perm: Sequence[int]) -> TncwAutomaton:
    """Rename state ``q`` to ``perm[q]``."""
    if sorted(perm) != list(a.states):
        raise ValueError("renumbering must be a permutation of the states")
    trs = frozenset(Transition(perm[t.src], t.letter, perm[t.dst], t.mark) for t in a.transitions)
    return TncwAutomaton(a.alphabet, a.num_states, perm[a.initial], trs, a.name)


def reachable_states(a: TncwAutomaton, start: int | None = None) -> list[int]:
    start = a.initial if start is None else start
    seen = {start}
    order = [start]
    for q in order:
        for s in a.letters:
            for d in a.successors(q, s):
                if d not in seen:
                    seen.add(d)
                    order.append(d)
    return sorted(seen)


def canonical_renumber(a: TncwAutomaton) -> TncwAutomaton:
    """Breadth-first renumbering from the initial state.

    Successors are visited letter by letter, non-alpha before alpha, then by
    current index, so two automata differing only by a renaming that preserves
    this order serialize identically.  Unreachable states keep their relative
    order at the end.
    """
    order = [a.initial]
    seen = {a.initial}
    for q in order:
        for s in a.letters:
            for d in a.safe_successors(q, s) + a.alpha_successors(q, s):
                if d not in seen:
                    seen.add(d)
                    order.append(d)
    order += [q for q in a.states if q not in seen]
    perm = [0] * a.num_states
    for i, q in enumerate(order):
        perm[q] = i
    return renumber(a, perm)


@dataclass(frozen=True)
class Refusal:
    """A negative answer with its reason; falsy so callers can write ``if witness:``."""

    reason: str

    def __bool__(self):
        return False


class BoundExceeded(RuntimeError):
    """An enumeration would exceed its configured bound."""
