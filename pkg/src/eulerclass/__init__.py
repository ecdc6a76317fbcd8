"""Exact 2-refined relative class numbers of prime-power cyclotomic fields.

The package computes generalized Euler numbers E_{n,chi} in exact cyclotomic
arithmetic, assembles the 2-refined relative class numbers h_minus(p, n)
from the odd-character products, measures their p-adic valuation growth,
and cross-checks the underlying zeta-function decomposition numerically.
"""

from .algebra import (
    ORD_INFINITY,
    CycElement,
    IntPolynomial,
    Rational,
    as_rational,
    cyclotomic_polynomial,
    embed_complex,
    embed_into,
    galois_apply,
    ordp_rational,
    ring_add,
    ring_multiply,
    ring_negate,
    root_of_unity_power,
)
from .characters import (
    DirichletCharacter,
    character_table,
    chi_eval,
    conductor,
    parity,
    primitive_root,
)
from .classnumber import HMinusResult, h_minus, odd_product_by_conductor, ordp_h_minus_sequence
from .errors import ConsistencyError, InputError, NotRationalError, ResourceLimitError
from .euler import (
    RationalPolynomial,
    bernoulli_polynomial,
    euler_polynomial,
    generalized_euler_number,
)
from .iwasawa import IwasawaFit, fit_affine_model, power_series_invariants, two_part_valuation
from .padics import (
    character,
    character_power,
    constant,
    convergence_profile,
    fermionic_sum,
    monomial_shift,
    volkenborn_sum,
)

__version__ = "0.1.0"
