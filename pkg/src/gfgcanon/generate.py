"""Seeded random tDCWs for property tests and the CLI."""
from __future__ import annotations

import random
import string

from .automaton import ALPHA, NONALPHA, TncwAutomaton, Transition, renumber

CORPUS_SEEDS = range(1, 201)


def random_tdcw(states: int, letters: int, seed: int, density: float = 0.3) -> TncwAutomaton:
    """One successor per (state, letter), each marked alpha with probability ``density``."""
    if states < 1 or not 1 <= letters <= 26:
        raise ValueError("need at least one state and between 1 and 26 letters")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    trs = frozenset(
        Transition(q, l, rng.randrange(states), ALPHA if rng.random() < density else NONALPHA)
        for q in range(states)
        for l in range(letters)
    )
    return TncwAutomaton(tuple(string.ascii_lowercase[:letters]), states, 0, trs, f"random-{seed}")


def corpus_instance(seed: int) -> TncwAutomaton:
    """Corpus member: at most 5 states over 2 or 3 letters, shape drawn from the seed."""
    rng = random.Random(f"corpus-{seed}")
    n = rng.randint(1, 5)
    k = rng.choice((2, 3))
    density = rng.choice((0.2, 0.35, 0.5))
    return random_tdcw(n, k, seed, density)


def corpus() -> list[TncwAutomaton]:
    return [corpus_instance(s) for s in CORPUS_SEEDS]


def permute(a: TncwAutomaton, seed: int) -> TncwAutomaton:
    perm = list(a.states)
    random.Random(seed).shuffle(perm)
    return renumber(a, perm)
