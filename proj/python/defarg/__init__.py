"""Default logic reasoning through propositional argumentation."""

from ._core import (
    ArgumentationSystem,
    BoundExceeded,
    DefaultTheory,
    Error,
    Formula,
    InvariantViolation,
    LookupError,
    ParseError,
    QueryError,
    Reasoner,
    TheoryError,
    forget,
    golden_suite,
    minimal_contradictions,
    oracle_equivalence,
    oracle_extensions,
    oracle_report,
    parse_formula,
    parse_theory,
    supporting_arguments,
    translate,
)

__all__ = [
    "ArgumentationSystem",
    "BoundExceeded",
    "DefaultTheory",
    "Error",
    "Formula",
    "InvariantViolation",
    "LookupError",
    "ParseError",
    "QueryError",
    "Reasoner",
    "TheoryError",
    "forget",
    "golden_suite",
    "minimal_contradictions",
    "oracle_equivalence",
    "oracle_extensions",
    "oracle_report",
    "parse_formula",
    "parse_theory",
    "reason",
    "supporting_arguments",
    "translate",
]


def reason(text, **options):
    """Parse theory text and return a Reasoner over its translation."""
    return Reasoner(translate(parse_theory(text)), **options)
