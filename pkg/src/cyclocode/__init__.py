"""Two-parameter cyclic codes over F_q built from a tower F_{q^k}/F_q.

The code is c(a, b) = (a*gamma^((q^k-1)e1 i/(q-1)) + Tr(b*gamma^(e2 i)))_i
for i < q^k - 1.  Its weight distribution is computed both by exhaustive
enumeration and from closed forms driven by Gauss and Jacobi sums when
d = gcd(q-1, k*e1 - e2) <= 4.
"""

from .charsum import (
    CharSpec,
    EisensteinInt,
    GaussianInt,
    additive_char,
    cubic_AB,
    gauss_quadratic_exact,
    gauss_sum,
    gauss_sum_lifted,
    jacobi_cubic,
    quartic_decompose,
    t_sum_closed_form,
    t_sum_exact,
    z_count,
)
from .code import (
    CodeSpec,
    WeightDistribution,
    build_codeword,
    dual_distance_probe,
    griesmer_sum,
    is_griesmer_optimal,
    min_distance,
    min_distance_lower_bound,
    pless_moment_check,
    validate_spec,
    weight_distribution_brute,
)
from .errors import CycloCodeError, Mismatch
from .field import (
    build_base_field,
    build_extension,
    discrete_log,
    minimal_polynomial,
    norm,
    parity_check_polynomial,
    trace,
)
from .golden import GOLDEN_EXAMPLES
from .theory import compare, predict, specialize_check, table_rows

__version__ = "0.1.0"
