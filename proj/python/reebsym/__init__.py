"""Symmetry groups of Morse functions on surfaces (Python bindings)."""

from ._core import (
    ReebsymError,
    are_isomorphic_words,
    aut_tree,
    brute_force_aut_count,
    enumerate_words,
    extract,
    group_of_reeb,
    is_simple_word,
    member,
    normalize_word,
    random_words,
    realize_word,
    reeb_to_dot,
    round_trip,
    run_cli,
    validate_reeb_text,
    word_order,
)

__all__ = [
    "ReebsymError",
    "are_isomorphic_words",
    "aut_tree",
    "brute_force_aut_count",
    "enumerate_words",
    "extract",
    "group_of_reeb",
    "is_simple_word",
    "member",
    "normalize_word",
    "random_words",
    "realize_word",
    "reeb_to_dot",
    "round_trip",
    "run_cli",
    "validate_reeb_text",
    "word_order",
]
