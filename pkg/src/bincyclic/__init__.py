"""Binary cyclic codes of length 2^m - 1 with dimension near n/2.

Defining-set constructions, generator-polynomial assembly over GF(2^m),
and minimum-distance verification (exhaustive for small codes, randomized
low-weight search plus run bounds for large ones).
"""

from .gf2 import (
    FieldContext,
    make_field,
    minimal_polynomial,
    poly_degree,
    poly_divrem,
    poly_from_bitstring,
    poly_from_hex,
    poly_mod,
    poly_mul,
    poly_pretty,
    poly_to_bitstring,
    poly_to_hex,
)
from .cosets import (
    CosetTable,
    SizeClassification,
    WeightClassView,
    build_table,
    classify_by_size,
    coset_of,
    is_union_of_cosets,
    pi,
    pi_inv,
    rho,
    weight_classes,
)
from .constructions import (
    ConstructionAudit,
    DefiningSet,
    EvenMAudit,
    OddPqAudit,
    SelectionError,
    SqrtComplementAudit,
    TwoPrimeAudit,
    WeightClassAudit,
    build_even_m,
    build_odd_pq,
    build_sqrt_complement,
    build_two_prime,
    build_weight_class,
)
from .codecore import (
    CodeReport,
    CyclicCode,
    DegenerateCodeError,
    assemble,
    bch_lower_bound,
    bch_run,
    describe,
    dual_defining_set,
)
from .distance import (
    BudgetExceeded,
    DistanceResult,
    SearchError,
    auto_distance,
    exact_min_distance,
    low_weight_search,
)
from .fixtures import (
    FIXTURES,
    CheckRow,
    ExpectedCode,
    Fixture,
    FixtureReport,
    run_fixture,
    select_fixtures,
)

__version__ = "0.1.0"

__all__ = [
    "FieldContext",
    "make_field",
    "minimal_polynomial",
    "poly_degree",
    "poly_divrem",
    "poly_from_bitstring",
    "poly_from_hex",
    "poly_mod",
    "poly_mul",
    "poly_pretty",
    "poly_to_bitstring",
    "poly_to_hex",
    "CosetTable",
    "SizeClassification",
    "WeightClassView",
    "build_table",
    "classify_by_size",
    "coset_of",
    "is_union_of_cosets",
    "pi",
    "pi_inv",
    "rho",
    "weight_classes",
    "ConstructionAudit",
    "DefiningSet",
    "EvenMAudit",
    "OddPqAudit",
    "SelectionError",
    "SqrtComplementAudit",
    "TwoPrimeAudit",
    "WeightClassAudit",
    "build_even_m",
    "build_odd_pq",
    "build_sqrt_complement",
    "build_two_prime",
    "build_weight_class",
    "CodeReport",
    "CyclicCode",
    "DegenerateCodeError",
    "assemble",
    "bch_lower_bound",
    "bch_run",
    "describe",
    "dual_defining_set",
    "BudgetExceeded",
    "DistanceResult",
    "SearchError",
    "auto_distance",
    "exact_min_distance",
    "low_weight_search",
    "FIXTURES",
    "CheckRow",
    "ExpectedCode",
    "Fixture",
    "FixtureReport",
    "run_fixture",
    "select_fixtures",
    "__version__",
]
