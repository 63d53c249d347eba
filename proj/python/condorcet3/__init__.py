"""Three-candidate Condorcet extensions: rules, axiom checks, irresoluteness counts."""

from ._core import (
    BoundExceeded,
    Profile,
    axiom_names,
    check_assignment,
    check_axiom,
    condorcet_winner,
    dimacs,
    irresoluteness,
    margins,
    mcgarvey,
    replay,
    rule_names,
    solve_reinforcement,
    winners,
)

__all__ = [
    "BoundExceeded",
    "Profile",
    "axiom_names",
    "check_assignment",
    "check_axiom",
    "condorcet_winner",
    "dimacs",
    "irresoluteness",
    "margins",
    "mcgarvey",
    "replay",
    "rule_names",
    "solve_reinforcement",
    "winners",
]
