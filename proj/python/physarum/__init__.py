"""Physarum process calculus toolkit."""

from ._physarum import (
    Lts,
    ParseError,
    PhysarumError,
    SceneError,
    Term,
    axiom_equal,
    bisimilar,
    bisimulation_blocks,
    build_lts,
    complement,
    connectives,
    eval_formula,
    format,
    law_report,
    normalize,
    parse,
    run_cli,
    sort,
    transitions,
)

__all__ = [
    "Lts",
    "ParseError",
    "PhysarumError",
    "SceneError",
    "Term",
    "axiom_equal",
    "bisimilar",
    "bisimulation_blocks",
    "build_lts",
    "complement",
    "connectives",
    "eval_formula",
    "format",
    "law_report",
    "normalize",
    "parse",
    "run_cli",
    "sort",
    "transitions",
]
