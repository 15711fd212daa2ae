"""Reasoning with inconsistent ontologies through maximal consistent subsets."""

from ._core import (
    Error,
    Ontology,
    brute_force_mcs,
    check,
    classify,
    entails,
    hash_vectors,
    infers,
    inject,
    mcs,
    parse,
    query,
    report,
    score,
    sentences,
    sim_cos,
    sim_euc,
    triples,
)


def error_code(exc):
    """Stable code name of an Error, e.g. "SyntaxError"."""
    return exc.args[0]


__all__ = [
    "Error",
    "Ontology",
    "brute_force_mcs",
    "check",
    "classify",
    "entails",
    "error_code",
    "hash_vectors",
    "infers",
    "inject",
    "mcs",
    "parse",
    "query",
    "report",
    "score",
    "sentences",
    "sim_cos",
    "sim_euc",
    "triples",
]
