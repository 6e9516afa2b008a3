"""Detect and remove useless transitions in pushdown automata."""

from ._core import (
    AnalysisReport,
    Error,
    ParseError,
    Pda,
    Transition,
    ValidationError,
    __version__,
    analyze,
    bounded_language,
    bounded_useful,
    cfg_to_pda,
    exact_useless,
    export_dot,
    nfa_dot,
    parse_pda,
    print_pda,
    prune,
    random_pda,
    remove_orphan_states,
    validate,
)

__all__ = [
    "AnalysisReport",
    "Error",
    "ParseError",
    "Pda",
    "Transition",
    "ValidationError",
    "__version__",
    "analyze",
    "bounded_language",
    "bounded_useful",
    "cfg_to_pda",
    "exact_useless",
    "export_dot",
    "nfa_dot",
    "parse_pda",
    "print_pda",
    "prune",
    "random_pda",
    "remove_orphan_states",
    "validate",
]
