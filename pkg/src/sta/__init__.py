"""Numerical engine for the complexified spacetime algebra Cl(1,3).

Multivector arithmetic with complex coefficients, the spectral-basis
isomorphism with 4x4 complex matrices, Dirac spinor operators and their
2x2 representation over the commutative ring span{1, i, I, iI}, complex
Riemann-sphere spin states with Lorentz-boost decomposition, bra-ket
measurement probabilities, and the quadratic (Fierz) identities between
spinor bilinears.
"""

from .algebra import (DEFAULT_TOL, E1, E2, E3, G0, G1, G2, G3, GAMMA,
                      J_UNIT, Multivector, ONE, PSEUDOSCALAR,
                      antisym_product, complex_conjugate, cross, exp,
                      format_multivector, geometric_product, grade_involute,
                      grade_project, inner, inverse, pauli_conjugations,
                      pauli_embed, reverse, star, sym_product, wedge)
from .errors import (AlgebraError, DegenerateBoostError, EvalError,
                     NullStateError, ParseError, SingularError,
                     ZeroDivisorError)
from .fierz import (FierzReport, Observables, RegularityReport, fierz_check,
                    observables, regularity)
from .matrices import (IDEMPOTENTS, IdempotentSet, RingMatrix, det4,
                       e_matrices, from_matrix, inverse4, ring_determinant,
                       ring_matrix, spectral_basis, to_matrix)
from .measurement import (GaugeParams, Ket, PauliKet, bra, braket,
                          braket_components, dirac_from_e, e_bra, e_inner,
                          e_outer, family_probability, family_state,
                          gauge_normalize, gauge_transform,
                          is_gauge_normalized, is_physical,
                          is_probability_value, ket_from_pauli,
                          normalize_physical, special_condition,
                          spin_up_along, transition_probability)
from .ring import RingElement
from .spinors import (BoostDecomposition, CanonicalForms, DiracSpinor,
                      SphereState, SpinorOperator, boost_decompose,
                      canonical_split, complex_operators, family_spinor,
                      family_vector, family_velocity_ratio, g_spinor,
                      hermitian_split, odd_operator, operator_from_even,
                      perp_state, ring_pair, sphere_state, spinor_operator,
                      spinor_from_ring_pair, substitution_vars,
                      spinor_from_substitution_vars)

__version__ = "0.1.0"
