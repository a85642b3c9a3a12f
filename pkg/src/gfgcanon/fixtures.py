"""Hand-transcribed example automata shipped as HOA files.

=========  ======================================================================
name       contents
=========  ======================================================================
fig1a      3-state DCW for "finitely many a or finitely many b", switch state α
fig1b      a structurally different 3-state DCW for the same language
fig2       3-state tDCW over {a,b,c}; all states equivalent, q2 ≾ q0
fig4       frontier automaton obtained from fig2 (2 states, α-homogeneous)
fig5c1     fig4 without the c-labeled α-edge q0 -> q0
fig5c2     fig4 without the c-labeled α-edge q0 -> q1
fig6d1     2-state tDCW over {b,c} for (b+c)*(bc)^ω
fig6d2     a safe-isomorphic but not isomorphic tDCW for the same language
fig7       fig4 saturated with every allowed α-edge
=========  ======================================================================

The state-based DCWs of fig1 are stored transition-based: every edge leaving
an accepting-set state is marked α, which preserves the language.
"""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .automaton import TncwAutomaton
from .hoa import parse_hoa

NAMES = ("fig1a", "fig1b", "fig2", "fig4", "fig5c1", "fig5c2", "fig6d1", "fig6d2", "fig7")


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    return resources.files("gfgcanon").joinpath("data", f"{name}.hoa").read_text()


@lru_cache(maxsize=None)
def load(name: str) -> TncwAutomaton:
    return parse_hoa(fixture_text(name))
