"""Exact graded characters of PBW-filtered vacuum modules of affine sl2.

The same (q, z, u)-series is computed along independent routes (monomial bases,
fermionic and bosonic sums, supernomials, lattice principal subspaces and
quotients of polynomial rings by current relations) so they can be compared
coefficient by coefficient.
"""

from .formulas import (
    GramMatrix,
    bosonic_level1,
    fermionic_level1,
    fermionic_level_k,
    fused_character_level1,
    gaussian_binomial,
    gram_matrix_Qk,
    principal_char,
    supernomial,
)
from .ideal import (
    dimension_table,
    graded_dimension,
    quotient_character,
    relations_A,
    relations_B,
    relations_C,
    standard_monomials,
)
from .monomials import (
    EHF,
    EHF_PRIME,
    OrderedMonomial,
    character_of,
    enumerate_monomials,
    is_admissible,
    lex_compare,
    phi_forward,
    phi_inverse,
)
from .series import INF, LaurentPoly, Series3, invert_unit, pochhammer_inverse
from .sl2 import degeneration_limits, degeneration_matrices, lower_relation, lowering_orbit

__version__ = "0.1.0"
