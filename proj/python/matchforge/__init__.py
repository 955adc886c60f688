"""Weakly stable matchings with ties and unacceptable partners.

Matchings are lists of ``(person, person)`` tuples such as ``("m1", "w3")``;
a person who stays single appears paired with themself, e.g. ``("w2", "w2")``.
"""

from ._core import (
    CapExceeded,
    DomainError,
    Instance,
    InternalError,
    InvalidInstance,
    InvalidMatching,
    ParseError,
    answer_sets,
    blocking_report,
    criterion_cost,
    decode_answers,
    encode_disjunctive,
    encode_normal,
    encode_optimization,
    enumerate_stable,
    exists_stable_with_cardinality,
    is_answer_set,
    is_weakly_stable,
    optimize,
    pair_is_stable,
    parse_instance,
    random_instance,
    serialize_instance,
    solve,
)

__version__ = "0.1.0"
