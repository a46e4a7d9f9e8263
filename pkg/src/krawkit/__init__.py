"""krawkit: exact binary Krawtchouk polynomials, binomial identities, 2-adic
congruence predictors, and central-binomial/Catalan recursions, each quantity
computable by independent routes that must agree bit-exactly."""

from .binomial_identities import (
    consecutive_even_product,
    consecutive_odd_product,
    double_binomial,
    pochhammer_binomial,
    power_reduce_binomial,
    power_reduce_binomial_single,
    stirling_binomial,
)
from .catalan_numbers import (
    ROUTES,
    catalan,
    catalan_congruence,
    catalan_power_congruence,
    catalan_residues,
    mersenne_parity,
    mod4_class,
    motzkin,
    motzkin_inverse_check,
)
from .central import (
    CACHE,
    SequenceCache,
    central_alt_recursion,
    central_direct,
    central_double,
    central_half_recursion,
    central_krawtchouk_sum,
    central_self_recursion,
    central_sum,
)
from .characters import (
    exterior_algebra_character,
    exterior_character,
    split_middle_character,
)
from .dyadic import (
    CongruenceClaim,
    binomial_valuation,
    factorial_valuation,
    predict_extended_congruence,
    predict_kronecker_congruence,
    predict_near_power_congruence,
    predict_scaled_congruence,
    predict_valuation_congruence,
    valuation_law_report,
    verify_claim,
)
from .errors import (
    EnumerationLimitError,
    IdentityViolationError,
    InvariantViolationError,
    KrawkitError,
    NonIntegralResultError,
    ParameterError,
    UnsupportedClaimError,
)
from .polynomials import (
    KrawtchoukTable,
    binomial,
    build_table,
    krawtchouk,
    krawtchouk_at_two,
    krawtchouk_closed,
    krawtchouk_half,
    krawtchouk_in_range,
    krawtchouk_via_symmetry,
)
from .reduction import (
    ReductionTerm,
    ReductionTrace,
    cancellation_sum,
    halve_degree,
    halve_order,
    halve_order_split,
    power_reduce,
    power_reduce_total,
    residual_exponent,
    term_cutoff,
)

__version__ = "0.1.0"
