"""Dirac spinors, spinor operators, and complex Riemann-sphere states.

A 4-component complex column (p1, p2, p3, p4) is carried inside the
algebra as the minimal-left-ideal element

    S = (p1 + p2 e13 + p3 e3 + p4 e1) u_pp,

and summing the four conjugate copies of S recovers an invertible real
even multivector, the spinor operator.  The operator is equally well
described by an ordered pair of ring scalars (r0, r1) with

    r0 = p1 + J p3,   r1 = p4 + J p2,

which is the 2x2 representation over span{1, i, I, iI}.  Inverting r0
produces the stereographic ring coordinate L = r0^-1 r1 of a point on
the complex Riemann sphere; its sphere vector

    M = ((L - conj L)/2) J e1 - ((L + conj L)/2) I e2 + e3

satisfies e3 o M = 1 and M^2 = 1 - L conj(L).  When M^2 is nonzero the
unit vector Mhat = M / sqrt(M^2) exists, splits into real vectors as
m1 + I m2 with m1^2 - m2^2 = 1 and m1 . m2 = 0, and encodes a rotation
followed by a Lorentz boost of rapidity 2 phi along m1 x m2, where
cosh phi = |m1|.  The spin axis is a = Mhat e3 Mhat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import cmath

import numpy as np

from .algebra import (E1, E2, E3, E12, E13, G0, Multivector, ONE,
                      PSEUDOSCALAR, antisym_product, exp, sym_product)
from .errors import DegenerateBoostError, NullStateError
from .matrices import (E3_AXIS, E3_PLUS, IDEMPOTENTS, RingMatrix, to_matrix)
from .ring import R_J, R_ONE, RingElement

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class DiracSpinor:
    """Four complex components of a column spinor."""

    phi1: complex
    phi2: complex
    phi3: complex
    phi4: complex

    def __post_init__(self):
        for p in self.components:
            if not (np.isfinite(p.real) and np.isfinite(p.imag)):
                raise ValueError("non-finite spinor component")

    @property
    def components(self) -> tuple[complex, complex, complex, complex]:
        return (complex(self.phi1), complex(self.phi2),
                complex(self.phi3), complex(self.phi4))

    @classmethod
    def from_components(cls, comps) -> "DiracSpinor":
        p1, p2, p3, p4 = comps
        return cls(complex(p1), complex(p2), complex(p3), complex(p4))

    def scaled(self, factor: complex) -> "DiracSpinor":
        return DiracSpinor.from_components(
            [factor * p for p in self.components])


def substitution_vars(d: DiracSpinor):
    """Real 4-vectors (x, y) with p1 = x0 + i y3, p2 = -y2 + i y1,
    p3 = x3 + i y0, p4 = x1 + i x2."""
    p1, p2, p3, p4 = d.components
    x = np.array([p1.real, p4.real, p4.imag, p3.real])
    y = np.array([p3.imag, p2.imag, -p2.real, p1.imag])
    return x, y


def spinor_from_substitution_vars(x, y) -> DiracSpinor:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return DiracSpinor(
        complex(x[0], y[3]),
        complex(-y[2], y[1]),
        complex(x[3], y[0]),
        complex(x[1], x[2]),
    )


def space_paravector(t, v) -> Multivector:
    """t + v1 e1 + v2 e2 + v3 e3 in the even subalgebra."""
    return (Multivector.scalar(t) + complex(v[0]) * E1
            + complex(v[1]) * E2 + complex(v[2]) * E3)


def spacetime_vector(v) -> Multivector:
    """v0 g0 + v1 g1 + v2 g2 + v3 g3."""
    from .algebra import GAMMA
    out = Multivector.zero()
    for mu in range(4):
        out = out + complex(v[mu]) * GAMMA[mu]
    return out


# ---- ideal elements and operators -----------------------------------------


def g_spinor(d: DiracSpinor) -> Multivector:
    """Minimal-left-ideal image (p1 + p2 e13 + p3 e3 + p4 e1) u_pp."""
    p1, p2, p3, p4 = d.components
    return (p1 * ONE + p2 * E13 + p3 * E3 + p4 * E1) * IDEMPOTENTS.u_pp


def ring_pair(d: DiracSpinor):
    """The pair (r0, r1) = (p1 + J p3, p4 + J p2)."""
    p1, p2, p3, p4 = d.components
    return (RingElement.from_complex_pair(p1, p3),
            RingElement.from_complex_pair(p4, p2))


def spinor_from_ring_pair(r0: RingElement, r1: RingElement) -> DiracSpinor:
    p1, p3 = r0.complex_pair
    p4, p2 = r1.complex_pair
    return DiracSpinor(p1, p2, p3, p4)


@dataclass(frozen=True)
class SpinorOperator:
    """Real even multivector of a Dirac spinor, with its cached ring pair.

    Attributes:
        psi: the even multivector (sum of the four conjugate ideal copies).
        ring0, ring1: the 2x2 ring representation pair.
        spinor: the source components.
    """

    psi: Multivector
    ring0: RingElement
    ring1: RingElement
    spinor: DiracSpinor

    def ring_matrix(self) -> RingMatrix:
        return RingMatrix(r0=self.ring0, r1=self.ring1)

    def ring_det(self) -> RingElement:
        return self.ring_matrix().det()


def spinor_operator(d: DiracSpinor) -> SpinorOperator:
    """Build the even operator a1 + e13 a2 + e3 a3 + e1 a4 with
    a_k = p_k under i -> e12 (the blades stand left of the a_k)."""
    alphas = [Multivector.scalar(p.real) + p.imag * E12 for p in d.components]
    psi = alphas[0] + E13 * alphas[1] + E3 * alphas[2] + E1 * alphas[3]
    r0, r1 = ring_pair(d)
    return SpinorOperator(psi=psi, ring0=r0, ring1=r1, spinor=d)


def operator_from_even(psi: Multivector, tol: float = 1e-9) -> SpinorOperator:
    """Recover the operator view of a real even multivector.

    The first matrix column of the element is its spinor; the input is
    rejected when it is odd or not expressible that way (complex even).
    """
    if not psi.is_even():
        raise ValueError("spinor operator must be even")
    col = to_matrix(psi)[:, 0]
    op = spinor_operator(DiracSpinor.from_components(col))
    if op.psi.max_diff(psi) > tol:
        raise ValueError("even multivector is not a real spinor operator")
    return op


def odd_operator(d: DiracSpinor) -> Multivector:
    """The odd companion: the even operator times g0."""
    return spinor_operator(d).psi * G0


def complex_operators(d: DiracSpinor):
    """The pair (Z+, Z-) = (psi E3, psi g0 E3) with E3 = J e3."""
    psi = spinor_operator(d).psi
    return psi * E3_AXIS, psi * G0 * E3_AXIS


def hermitian_split(op: SpinorOperator):
    """Split psi = X + I Y into the g0-frame Hermitian part X and the
    anti-Hermitian part I Y (fixed and negated by g0 ~psi g0)."""
    psi = op.psi
    dagger = G0 * psi.reverse() * G0
    return (psi + dagger) * 0.5, (psi - dagger) * 0.5


# ---- the complex Riemann sphere --------------------------------------------


def sphere_vector(stereo: RingElement) -> Multivector:
    """Sphere vector of a stereographic ring coordinate."""
    sbar = stereo.conj_i()
    ca = (stereo - sbar) * 0.5 * R_J
    cb = (stereo + sbar) * 0.5 * RingElement(cI=1.0)
    return ca.to_multivector() * E1 - cb.to_multivector() * E2 + E3


@dataclass(frozen=True)
class SphereState:
    """Point of the complex Riemann sphere attached to a spinor.

    Attributes:
        m: sphere vector with e3 o m = 1.
        stereo: the ring coordinate L = r0^-1 r1.
        m_squared: ring value 1 - L conj(L).
        m_hat: unit sphere vector m / sqrt(m_squared).
        a_hat: spin axis m_hat e3 m_hat.
        m1, m2: real split m_hat = m1 + I m2 (None if m_squared is not
            real positive, where no hyperbolic split exists).
        phi_boost: rapidity parameter with cosh phi = |m1| (the attached
            Lorentz boost has velocity tanh 2 phi); None with m1.
        null_boost: True when L is a nonzero zero divisor, the light-like
            limiting case that cannot describe a spin-1/2 state.
    """

    m: Multivector
    stereo: RingElement
    m_squared: RingElement
    m_hat: Multivector
    a_hat: Multivector
    m1: Optional[Multivector]
    m2: Optional[Multivector]
    phi_boost: Optional[float]
    null_boost: bool


@dataclass(frozen=True)
class BoostDecomposition:
    """Hyperbolic split of a unit sphere vector.

    m_hat = m1 + I m2 = m1_hat cosh(phi) + I m2_hat sinh(phi), and the
    same vector is exp(phi m1_hat x m2_hat) m1_hat.  The attached boost
    of the spin axis has velocity tanh(2 phi) along the direction, and
    |m2|/|m1| = tanh(phi) is the plane speed ratio.
    """

    m1: Multivector
    m2: Multivector
    m1_hat: Multivector
    m2_hat: Multivector
    phi: float
    direction: Multivector

    @property
    def velocity_ratio(self) -> float:
        return math.tanh(self.phi)

    @property
    def boost_velocity(self) -> float:
        return math.tanh(2.0 * self.phi)


_VECTOR_BASIS = (E1, E2, E3,
                 PSEUDOSCALAR * E1, PSEUDOSCALAR * E2, PSEUDOSCALAR * E3)
_VECTOR_SLOTS = []
for _base in _VECTOR_BASIS:
    _mask = int(np.argmax(np.abs(_base.coeffs)))
    _VECTOR_SLOTS.append((_mask, 1.0 / _base.coeffs[_mask]))


def complex_vector_parts(g: Multivector):
    """Split a complex space vector g = v + I w into component triples."""
    comps = [g.coeffs[mask] * factor for mask, factor in _VECTOR_SLOTS]
    return np.array(comps[:3]), np.array(comps[3:])


def space_vector(v) -> Multivector:
    return complex(v[0]) * E1 + complex(v[1]) * E2 + complex(v[2]) * E3


def sphere_state(d: DiracSpinor, null_tol: float = 1e-12) -> SphereState:
    """Riemann-sphere data of a spinor.

    Raises ZeroDivisorError when r0 is not invertible and NullStateError
    when the sphere vector squares to zero (the unit vector and the spin
    axis are then undefined; such spinors have vanishing ring
    determinant).
    """
    r0, r1 = ring_pair(d)
    stereo = r0.inverse() * r1
    m = sphere_vector(stereo)
    m_squared = RingElement.from_multivector(m * m, strict=True)
    if m_squared.magnitude() < null_tol:
        raise NullStateError("sphere vector squares to zero; no unit "
                             "vector exists for this spinor")
    root = m_squared.sqrt()
    m_hat = root.inverse() * m
    a_hat = m_hat * E3 * m_hat
    null_boost = stereo.is_zero_divisor() and not stereo.is_zero()

    m1 = m2 = None
    phi = None
    try:
        dec = decompose_unit_vector(m_hat)
        m1, m2, phi = dec.m1, dec.m2, dec.phi
    except DegenerateBoostError:
        pass
    return SphereState(m=m, stereo=stereo, m_squared=m_squared, m_hat=m_hat,
                       a_hat=a_hat, m1=m1, m2=m2, phi_boost=phi,
                       null_boost=null_boost)


def decompose_unit_vector(m_hat: Multivector,
                          tol: float = 1e-10) -> BoostDecomposition:
    """Hyperbolic split of a unit complex space vector."""
    v1, v2 = complex_vector_parts(m_hat)
    residual = m_hat.max_diff(space_vector(v1) + PSEUDOSCALAR * space_vector(v2))
    if residual > tol:
        raise DegenerateBoostError("not a complex space vector")
    if max(np.abs(v1.imag).max(), np.abs(v2.imag).max()) > tol:
        raise DegenerateBoostError(
            "unit sphere vector has imaginary components; its square is "
            "not real positive")
    r1 = v1.real
    r2 = v2.real
    n1 = float(np.linalg.norm(r1))
    n2 = float(np.linalg.norm(r2))
    if abs((n1 * n1 - n2 * n2) - 1.0) > tol or abs(float(r1 @ r2)) > tol:
        raise DegenerateBoostError("parts inconsistent with a unit square")
    m1 = space_vector(r1)
    m2 = space_vector(r2)
    phi = math.asinh(n2)
    if n2 < 1e-13:
        m2_hat = Multivector.zero()
        direction = Multivector.zero()
    else:
        m2_hat = space_vector(r2 / n2)
        direction = space_vector(np.cross(r1 / n1, r2 / n2))
    return BoostDecomposition(m1=m1, m2=m2, m1_hat=space_vector(r1 / n1),
                              m2_hat=m2_hat, phi=phi, direction=direction)


def boost_decompose(state: SphereState) -> BoostDecomposition:
    """Hyperbolic decomposition of the state's unit sphere vector."""
    return decompose_unit_vector(state.m_hat)


# ---- canonical factorizations of the parity-invariant part ----------------


@dataclass(frozen=True)
class CanonicalForms:
    """Exponential factorizations of S_E = S + S# (the parity-invariant
    ideal part).

    omega1 and omega2 are ring angles with exp(omega1)^2 equal to the
    ring determinant and exp(J omega2) the unit phase of r0.  The three
    stored factorizations all reproduce s_e:

        primary    = J exp(omega) m_hat E3+        (omega = omega1 + omega2 J)
        rotor_e3   = exp(omega1) (m_hat e3) exp(omega2 e3) E3+
        rotor_axis = exp(omega1) exp(omega2 a_hat) (a_hat m_hat) E3+

    z_e and b_e are the ring angle and unit plane of m_hat e3 written as
    cos(z_e) + I b_e sin(z_e); z_a and b_a do the same for a_hat m_hat.
    The b factors are None when the corresponding sine is a zero divisor
    (vector parallel to the axis).
    """

    omega1: RingElement
    omega2: RingElement
    m_hat: Multivector
    a_hat: Multivector
    s_e: Multivector
    primary: Multivector
    rotor_e3: Multivector
    rotor_axis: Multivector
    z_e: RingElement
    b_e: Optional[Multivector]
    z_a: RingElement
    b_a: Optional[Multivector]


def _ring_sin(z: RingElement) -> RingElement:
    p, m = z.split
    return RingElement.from_split(cmath.sin(p), cmath.sin(m))


def _angle_factor(product: Multivector):
    """Write a product of two unit complex vectors as
    cos(z) + I b sin(z) with a ring angle z and a unit vector b."""
    w = RingElement.from_multivector(product, strict=False)
    p, m = w.split
    z = RingElement.from_split(cmath.acos(p), cmath.acos(m))
    s = _ring_sin(z)
    if s.is_zero_divisor():
        return z, None
    plane = product - w.to_multivector()
    b = -(PSEUDOSCALAR * plane) * s.inverse().to_multivector()
    return z, b


def canonical_split(d: DiracSpinor) -> CanonicalForms:
    """Canonical exponential forms of the parity-invariant part.

    Raises ZeroDivisorError when the ring determinant or r0 conj(r0) is
    singular.
    """
    r0, r1 = ring_pair(d)
    rdet = (r0 * r0.conj_i()) - (r1.conj_i() * r1)
    omega1 = rdet.log() * 0.5
    norm0 = (r0 * r0.conj_i()).sqrt()
    phase0 = r0 * norm0.inverse()
    omega2 = R_J * phase0.log()
    e_w = omega1.exp() * phase0          # exp(omega1 + J omega2)

    stereo = r0.inverse() * r1
    m = sphere_vector(stereo)
    # branch-consistent unit vector: m r0 / e_w squares to one exactly
    m_hat = (r0 * e_w.inverse()) * m
    a_hat = m_hat * E3 * m_hat

    s = g_spinor(d)
    s_e = s + s.involute()

    e_w_mv = e_w.to_multivector()
    primary = R_J.to_multivector() * e_w_mv * m_hat * E3_PLUS
    rotor_e3 = (omega1.exp().to_multivector() * (m_hat * E3)
                * exp(omega2.to_multivector() * E3) * E3_PLUS)
    rotor_axis = (omega1.exp().to_multivector()
                  * exp(omega2.to_multivector() * a_hat)
                  * (a_hat * m_hat) * E3_PLUS)

    z_e, b_e = _angle_factor(m_hat * E3)
    z_a, b_a = _angle_factor(a_hat * m_hat)

    return CanonicalForms(omega1=omega1, omega2=omega2, m_hat=m_hat,
                          a_hat=a_hat, s_e=s_e, primary=primary,
                          rotor_e3=rotor_e3, rotor_axis=rotor_axis,
                          z_e=z_e, b_e=b_e, z_a=z_a, b_a=b_a)


def spin_up_idempotent(d: DiracSpinor) -> Multivector:
    """The idempotent (1 + L e1) E3+ sitting inside S_E."""
    r0, r1 = ring_pair(d)
    stereo = r0.inverse() * r1
    return (ONE + stereo.to_multivector() * E1) * E3_PLUS


# ---- the planar state family -----------------------------------------------


def family_ring_pair(x, phi_x: float, realization: int = 0):
    """Ring pairs of the planar family with sphere vector
    exp(phi_x e3) x + e3 for a plane vector x = (x1, x2).

    Two equivalent realizations are provided: (1, J exp(-J phi_x) c)
    and (exp(J phi_x), J c) with c = x1 + i x2.  Both give the same
    stereographic coordinate.
    """
    c = RingElement.scalar(complex(x[0], x[1]))
    if realization == 0:
        r0 = R_ONE
        r1 = R_J * RingElement.from_split(math.exp(-phi_x),
                                          math.exp(phi_x)) * c
    elif realization == 1:
        r0 = RingElement.from_split(math.exp(phi_x), math.exp(-phi_x))
        r1 = R_J * c
    else:
        raise ValueError("realization must be 0 or 1")
    return r0, r1


def family_spinor(x, phi_x: float, realization: int = 0) -> DiracSpinor:
    r0, r1 = family_ring_pair(x, phi_x, realization)
    return spinor_from_ring_pair(r0, r1)


def family_vector(x, phi_x: float) -> Multivector:
    """Closed form x cosh(phi) + e3 + I (e3 x x) sinh(phi)."""
    xv = space_vector((x[0], x[1], 0.0))
    e3_cross_x = space_vector((-x[1], x[0], 0.0))
    return (math.cosh(phi_x) * xv + E3
            + math.sinh(phi_x) * (PSEUDOSCALAR * e3_cross_x))


def family_velocity_ratio(x, phi_x: float) -> float:
    """Plane speed |m2|/|m1| of the family state: the ratio
    sqrt(x^2 sinh^2(phi) / (x^2 cosh^2(phi) + 1)), which is tanh of the
    decomposition parameter (the boost itself moves at tanh of twice
    that parameter)."""
    xx = float(x[0]) ** 2 + float(x[1]) ** 2
    sh, ch = math.sinh(phi_x), math.cosh(phi_x)
    return math.sqrt(xx * sh * sh / (xx * ch * ch + 1.0))


def perp_state(state: SphereState, x, phi_x: float,
               match_tol: float = 1e-9) -> SphereState:
    """The family state with opposite spin axis, -exp(phi e3) x / x^2 + e3.

    The input state must belong to the planar family with the given
    parameters and x must be nonzero; the result lives in the same
    inertial system (same phi_x) and its axis is the negative of the
    input's.
    """
    xx = float(x[0]) ** 2 + float(x[1]) ** 2
    if xx == 0.0:
        raise ValueError("zero plane vector has no perpendicular partner")
    if state.m.max_diff(family_vector(x, phi_x)) > match_tol:
        raise ValueError("state does not match the given family parameters")
    px = (-x[0] / xx, -x[1] / xx)
    return sphere_state(family_spinor(px, phi_x))
