"""quonstat: exact quon (q-deformed) operator algebra, composite
statistics, and Pauli-violation bound propagation."""

from .bounds import (
    BoundRecord,
    ChainRow,
    derive_chain,
    ingest_limits,
    load_bundled_limits,
    propagate_exact,
    propagate_first_order,
)
from .composite import (
    CompositeSpec,
    TwoCompositeResult,
    block_swap,
    composite_word,
    cross_term_magnitude,
    effective_exponent,
    two_composite_scalar,
    weo_limit_check,
)
from .errors import (
    CapExceeded,
    ContractViolation,
    LimitsFormatError,
    ParseError,
    QuonError,
    TheoremViolation,
    UnsupportedError,
)
from .fock import (
    GramMatrix,
    PsdReport,
    StateVector,
    build_state,
    check_psd,
    gram,
    irrep_weight_polys,
    irrep_weights,
    normalization_poly,
    permutation_basis,
    state_scalar_product,
    tensor,
)
from .permutations import (
    CharacterTable,
    RepCoefficients,
    all_permutations,
    character_table,
    compose,
    cycle_type,
    identity,
    inverse,
    inversion_number,
    preset_rep,
    random_rep,
    sign,
)
from .qpoly import QPolynomial
from .qpoly import parse as parse_polynomial
from .wick import (
    ModeLabel,
    delta_matrix,
    oracle_q_permanent,
    oracle_scalar_product,
    q_permanent,
    scalar_product,
)

__version__ = "0.1.0"

__all__ = [
    "BoundRecord",
    "CapExceeded",
    "ChainRow",
    "CharacterTable",
    "CompositeSpec",
    "ContractViolation",
    "GramMatrix",
    "LimitsFormatError",
    "ModeLabel",
    "ParseError",
    "PsdReport",
    "QPolynomial",
    "QuonError",
    "RepCoefficients",
    "StateVector",
    "TheoremViolation",
    "TwoCompositeResult",
    "UnsupportedError",
    "all_permutations",
    "block_swap",
    "build_state",
    "character_table",
    "check_psd",
    "compose",
    "composite_word",
    "cross_term_magnitude",
    "cycle_type",
    "delta_matrix",
    "derive_chain",
    "effective_exponent",
    "gram",
    "identity",
    "ingest_limits",
    "inverse",
    "inversion_number",
    "irrep_weight_polys",
    "irrep_weights",
    "load_bundled_limits",
    "normalization_poly",
    "oracle_q_permanent",
    "oracle_scalar_product",
    "parse_polynomial",
    "permutation_basis",
    "preset_rep",
    "propagate_exact",
    "propagate_first_order",
    "q_permanent",
    "random_rep",
    "scalar_product",
    "sign",
    "state_scalar_product",
    "tensor",
    "two_composite_scalar",
    "weo_limit_check",
]
