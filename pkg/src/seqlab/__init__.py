"""seqlab: generalized cyclotomic binary sequences and their 2-adic analysis.

Construction of the order-d class partition of Z_pq, the binary sequence
supported on the odd class union plus the multiples of p, exact 2-adic
complexity with its pq - p - q - 1 lower bound, Gauss-period and
determinant identities, and FCSR/LFSR synthesis instruments.
"""

__version__ = "0.1.0"

from .adic import (
    AdicReport,
    BoundVerdict,
    GcdDiagnostics,
    gcd_structure,
    s_of_2,
    lower_bound_verdict,
    two_adic_complexity,
)
from .attack import (
    AttackReport,
    RationalApprox,
    attack_report,
    berlekamp_massey,
    raa_approximate,
)
from .cyclotomy import (
    CyclotomicTables,
    SequenceParams,
    build_params,
    build_tables,
    cyclotomic_number,
    shifted_intersection,
    tables_to_json,
)
from .numtheory import (
    MersenneGcdSplit,
    PrimePair,
    common_primitive_root,
    is_prime,
    legendre_symbol,
    mersenne_gcd_split,
    multiplicative_order,
    whiteman_x,
)
from .sequence import (
    BinarySequence,
    autocorrelation,
    generate_modified_jacobi,
    generate_via_legendre,
    load_sequence,
    save_sequence,
)
from .spectral import (
    SpectralProfile,
    circulant_det_closed,
    circulant_det_exact,
    gauss_periods_numeric,
    omega_closed_form,
    spectrum_at,
)

__all__ = [
    "AdicReport",
    "AttackReport",
    "BinarySequence",
    "BoundVerdict",
    "CyclotomicTables",
    "GcdDiagnostics",
    "MersenneGcdSplit",
    "PrimePair",
    "RationalApprox",
    "SequenceParams",
    "SpectralProfile",
    "attack_report",
    "autocorrelation",
    "berlekamp_massey",
    "build_params",
    "build_tables",
    "circulant_det_closed",
    "circulant_det_exact",
    "common_primitive_root",
    "cyclotomic_number",
    "gauss_periods_numeric",
    "gcd_structure",
    "generate_modified_jacobi",
    "generate_via_legendre",
    "is_prime",
    "legendre_symbol",
    "load_sequence",
    "mersenne_gcd_split",
    "multiplicative_order",
    "omega_closed_form",
    "raa_approximate",
    "s_of_2",
    "save_sequence",
    "shifted_intersection",
    "spectrum_at",
    "tables_to_json",
    "lower_bound_verdict",
    "two_adic_complexity",
    "whiteman_x",
]
