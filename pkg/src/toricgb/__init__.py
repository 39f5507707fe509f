"""Groebner bases of simplicial toric ideals read off their Hilbert basis."""

from .core import (
    AxisGenerator,
    BadDimensions,
    Cmp,
    DuplicateGenerator,
    GcdWarning,
    Monomial,
    NonNegativityViolation,
    NotCongruent,
    NotGraded,
    NotInA,
    Presentation,
    ToricError,
    WrongDegree,
    class_cmp,
    degree,
    grevlex_cmp,
    grevlex_key,
    join,
    make_presentation,
    pi_value,
    validate_presentation,
    y_monomial_of,
)
from .decompose import (
    DecompositionReport,
    EquivClass,
    decomposition_report,
    equivalence_classes,
    n2_set,
)
from .enumeration import (
    BAEntry,
    BATable,
    N1PrimeSet,
    NotInBA,
    TerminationBoundExceeded,
    enumerate_BA,
    member_B,
    min_rep,
    reduction_number,
)
from .groebner import (
    Binomial,
    GroebnerResult,
    NotInB,
    minimal_generators,
    normal_form_monomial,
    reduced_groebner_basis,
)
from .verify import FiberReport, brute_min_rep, fiber_oracle, spair_check

__version__ = "0.1.0"

__all__ = [
    "AxisGenerator",
    "BadDimensions",
    "Cmp",
    "DuplicateGenerator",
    "GcdWarning",
    "Monomial",
    "NonNegativityViolation",
    "NotCongruent",
    "NotGraded",
    "NotInA",
    "Presentation",
    "ToricError",
    "WrongDegree",
    "class_cmp",
    "degree",
    "grevlex_cmp",
    "grevlex_key",
    "join",
    "make_presentation",
    "pi_value",
    "validate_presentation",
    "y_monomial_of",
    "DecompositionReport",
    "EquivClass",
    "decomposition_report",
    "equivalence_classes",
    "n2_set",
    "BAEntry",
    "BATable",
    "N1PrimeSet",
    "NotInBA",
    "TerminationBoundExceeded",
    "enumerate_BA",
    "member_B",
    "min_rep",
    "reduction_number",
    "Binomial",
    "GroebnerResult",
    "NotInB",
    "minimal_generators",
    "normal_form_monomial",
    "reduced_groebner_basis",
    "FiberReport",
    "brute_min_rep",
    "fiber_oracle",
    "spair_check",
]
