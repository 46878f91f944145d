"""Maps of the free skew monoidal category.

Terms, sequents and formulas may be given as strings in the surface syntax
or as the corresponding objects.
"""

from ._skewcoh import (
    FocusedDerivation,
    Formula,
    IllTypedError,
    ModelError,
    ParseError,
    RuleError,
    Sequent,
    Term,
    decide_equal,
    derivable,
    focderivs,
    fskmaps,
    hom_count,
    normal_form,
    parse_formula,
    parse_sequent,
    parse_term,
    ptd_equal,
    run_cli,
)

__all__ = [
    "FocusedDerivation",
    "Formula",
    "IllTypedError",
    "ModelError",
    "ParseError",
    "RuleError",
    "Sequent",
    "Term",
    "decide_equal",
    "derivable",
    "focderivs",
    "fskmaps",
    "hom_count",
    "normal_form",
    "parse_formula",
    "parse_sequent",
    "parse_term",
    "ptd_equal",
    "run_cli",
]
