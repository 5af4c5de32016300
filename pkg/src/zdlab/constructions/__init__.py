from .bisemimodule import (
    Bisemimodule,
    compatibility_witness,
    left_action_failures,
    module_failures,
    module_zero_divisors,
    regular_bisemimodule,
    right_action_failures,
    validate_bisemimodule,
)
from .endomorphisms import (
    ClosureFailure,
    endomorphism_pn_semiring,
    endomorphism_violation,
    endomorphisms,
    is_injective,
    kernel,
    magma_endomorphisms,
)
from .expectation import expectation_semiring, sigma_expectation, triangular_semiring
from .localization import (
    Fraction,
    denominator_violation,
    embedding_violation,
    fraction_embedding,
    localize,
    valid_denominator_sets,
)
from .polynomials import (
    laurent_mul,
    laurent_zero_product_check,
    poly_mul,
    poly_reversible_bounded,
    poly_zero_product_pairs,
    power_series_truncated,
    series_reversible_truncated,
    zero_product_pairs,
)
from .products import direct_product, matrix, matrix_semiring

__all__ = [
    "Bisemimodule", "ClosureFailure", "Fraction", "compatibility_witness", "left_action_failures",
    "module_failures", "right_action_failures",
    "denominator_violation", "direct_product", "embedding_violation", "endomorphism_pn_semiring",
    "endomorphism_violation", "endomorphisms", "expectation_semiring", "fraction_embedding",
    "is_injective", "kernel", "laurent_mul", "laurent_zero_product_check", "localize",
    "magma_endomorphisms", "matrix", "matrix_semiring", "module_zero_divisors", "poly_mul",
    "poly_reversible_bounded", "poly_zero_product_pairs", "power_series_truncated",
    "regular_bisemimodule", "series_reversible_truncated", "sigma_expectation",
    "triangular_semiring", "valid_denominator_sets", "validate_bisemimodule", "zero_product_pairs",
]
