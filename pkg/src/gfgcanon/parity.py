"""Max-parity games with edge priorities, solved by Zielonka's recursive algorithm.

Player 0 (EVEN) wins a play iff the largest priority seen infinitely often is
even.  Edge priorities are reduced to vertex priorities by subdividing every
edge with a vertex carrying the edge's priority.
"""
from __future__ import annotations

from dataclasses import dataclass, field

EVEN, ODD = 0, 1


@dataclass
class ParityGame:
    owner: list[int] = field(default_factory=list)
    edges: list[list[tuple[int, int]]] = field(default_factory=list)

    def add_position(self, owner: int) -> int:
        self.owner.append(owner)
        self.edges.append([])
        return len(self.owner) - 1

    def add_edge(self, src: int, dst: int, priority: int) -> None:
        if priority < 0:
            raise ValueError("priorities are non-negative")
        self.edges[src].append((dst, priority))

    def __len__(self):
        return len(self.owner)

    def dead_ends(self) -> list[int]:
        return [v for v, out in enumerate(self.edges) if not out]


@dataclass
class Solution:
    """Winning regions and positional strategies; ``strategy[p][v]`` is the edge index taken at ``v``."""

    winning: tuple[set[int], set[int]]
    strategy: tuple[dict[int, int], dict[int, int]]

    def winner(self, v: int) -> int:
        return EVEN if v in self.winning[EVEN] else ODD


class _VertexGame:
    def __init__(self, owner, prio, succ):
        self.owner, self.prio, self.succ = owner, prio, succ
        self.pred = [[] for _ in owner]
        for v, out in enumerate(succ):
            for w in out:
                self.pred[w].append(v)

    def attractor(self, V: set[int], target: set[int], player: int):
        attr = set(target) & V
        strat: dict[int, int] = {}
        remaining: dict[int, int] = {}
        queue = list(attr)
        while queue:
            w = queue.pop()
            for v in self.pred[w]:
                if v not in V or v in attr:
                    continue
                if self.owner[v] == player:
                    attr.add(v)
                    strat[v] = w
                    queue.append(v)
                else:
                    if v not in remaining:
                        remaining[v] = sum(1 for x in self.succ[v] if x in V)
                    remaining[v] -= 1
                    if remaining[v] == 0:
                        attr.add(v)
                        queue.append(v)
        return attr, strat

    def solve(self, V: set[int]):
        won = (set(), set())
        strat: tuple[dict[int, int], dict[int, int]] = ({}, {})
        V = set(V)
        while V:
            d = max(self.prio[v] for v in V)
            i = d % 2
            U = {v for v in V if self.prio[v] == d}
            A, sA = self.attractor(V, U, i)
            (W, S) = self.solve(V - A)
            if not W[1 - i]:
                won[i].update(V)
                strat[i].update(S[i])
                strat[i].update(sA)
                for u in U:
                    if self.owner[u] == i:
                        strat[i][u] = next(w for w in self.succ[u] if w in V)
                break
            B, sB = self.attractor(V, W[1 - i], 1 - i)
            won[1 - i].update(B)
            strat[1 - i].update({v: w for v, w in S[1 - i].items() if v in W[1 - i]})
            strat[1 - i].update(sB)
            V -= B
        return won, strat


def solve(game: ParityGame) -> Solution:
    """Solve ``game``; strategies are reported as indices into ``game.edges[v]``."""
    if game.dead_ends():
        raise ValueError(f"positions without moves: {game.dead_ends()[:5]}")
    n = len(game)
    owner = list(game.owner)
    prio = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    mid_edge: dict[int, int] = {}
    for v, out in enumerate(game.edges):
        for k, (w, p) in enumerate(out):
            m = len(owner)
            owner.append(EVEN)
            prio.append(p)
            succ.append([w])
            succ[v].append(m)
            mid_edge[m] = k
    vg = _VertexGame(owner, prio, succ)
    won, strat = vg.solve(set(range(len(owner))))
    regions = (won[EVEN] & set(range(n)), won[ODD] & set(range(n)))
    strategies = tuple(
        {v: mid_edge[m] for v, m in strat[p].items() if v < n and owner[v] == p} for p in (EVEN, ODD)
    )
    return Solution(regions, strategies)
