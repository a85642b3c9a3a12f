"""Minimization and canonization of transition-based co-Büchi automata."""
from .automaton import (
    ALPHA,
    NONALPHA,
    BoundExceeded,
    LassoWord,
    Refusal,
    TncwAutomaton,
    Transition,
    make_automaton,
    validate,
)
from .canon import Flavor, canonical_form, saturate_homogeneous, saturate_max
from .hoa import parse_hoa, to_dot, write_hoa
from .iso import IsoWitness, isomorphic, safe_isomorphic
from .minimize import NotNiceError, minimize, niceify
from .semantics import compute_relations, language_equiv, lasso_member
from .structure import normalize, safe_components

__all__ = [
    "ALPHA",
    "NONALPHA",
    "BoundExceeded",
    "Flavor",
    "IsoWitness",
    "LassoWord",
    "NotNiceError",
    "Refusal",
    "TncwAutomaton",
    "Transition",
    "canonical_form",
    "compute_relations",
    "isomorphic",
    "language_equiv",
    "lasso_member",
    "make_automaton",
    "minimize",
    "niceify",
    "normalize",
    "parse_hoa",
    "safe_components",
    "safe_isomorphic",
    "saturate_homogeneous",
    "saturate_max",
    "to_dot",
    "validate",
    "write_hoa",
]
