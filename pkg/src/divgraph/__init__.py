"""Exact linear systems of divisors on edge-weighted graphs.

Divisors are rational value vectors on the vertices of a connected,
loop-free, nonnegatively edge-weighted graph.  The package reduces divisors
to their unique reduced representatives, decides linear-system emptiness,
computes the dimension of a linear system, enumerates the extremal
empty-system divisors, and verifies the Riemann-Roch identity exactly.
"""

from .core import (
    Divisor,
    Rational,
    WeightedGraph,
    apply_firing,
    as_rational,
    off_base,
    principal_divisor,
)
from .lattice import (
    SingularMatrixError,
    admissible_firing_bound,
    dominating_firing,
    is_admissible_firing,
    is_equivalent,
    laplacian_image,
    reduced_laplacian,
    solve,
)
from .linsys import (
    ExtremalDivisor,
    canonical_symmetry_check,
    dimension_witness,
    domination_witness,
    extremal_empty_divisors,
    linear_system_dimension,
    riemann_roch_residual,
)
from .reduction import (
    BurnOutcome,
    ReductionResult,
    dhar_burn,
    is_reduced,
    linear_system_nonempty,
    reduce_divisor,
)

__all__ = [
    "BurnOutcome",
    "Divisor",
    "ExtremalDivisor",
    "Rational",
    "ReductionResult",
    "SingularMatrixError",
    "WeightedGraph",
    "admissible_firing_bound",
    "apply_firing",
    "as_rational",
    "canonical_symmetry_check",
    "dhar_burn",
    "dimension_witness",
    "dominating_firing",
    "domination_witness",
    "extremal_empty_divisors",
    "is_admissible_firing",
    "is_equivalent",
    "is_reduced",
    "laplacian_image",
    "linear_system_dimension",
    "linear_system_nonempty",
    "off_base",
    "principal_divisor",
    "reduce_divisor",
    "reduced_laplacian",
    "riemann_roch_residual",
    "solve",
]

__version__ = "0.1.0"
