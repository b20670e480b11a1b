"""Bra-ket layer: sesquilinear inner products, gauge, and probabilities.

Kets are ideal elements 2 (r0 + r1 e1) u_pp; their bras are the reversed
complex conjugates, and the pairing

    <F|W> = conj(f1) w1 + conj(f2) w2 - conj(f3) w3 - conj(f4) w4

is read off as the complex-scalar part of the bra-ket product.  The
even-subalgebra kets sqrt(2) (r0 + r1 e1) E3+ carry the same data; the
full inner product is recovered from their product by averaging the four
rest-frame conjugations.

A state is gauge normalized when its ring determinant is real and the
phase of r0 is an ordinary complex phase; multiplying by exp(I t + J p)
moves within the gauge class without touching the spin axis.  For unit
determinants the transition probability between two states is
(1 + a_F o a_W)/2, also computable projectively as
1 - (M_W - M_F)^2 / (M_W^2 M_F^2).  Both paths are evaluated and checked
against each other.  The planar family exp(phi e3) x + e3 makes the
probability a rational function of the two plane vectors; with equal
rapidities it is a genuine probability in [0, 1], while unequal
rapidities with x = y produce values >= 1 which are returned flagged
rather than clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import (E1, E3, Multivector, ONE, antisym_product, J_UNIT,
                      pauli_conjugations, sym_product)
from .errors import AlgebraError
from .matrices import E3_PLUS, IDEMPOTENTS, RingMatrix
from .ring import R_ONE, RingElement
from .spinors import (DiracSpinor, SphereState, family_spinor, g_spinor,
                      ring_pair, sphere_state, spinor_from_ring_pair)

_SQRT2 = math.sqrt(2.0)


# ---- kets in the u_pp ideal -------------------------------------------------


@dataclass(frozen=True)
class Ket:
    """Ideal element 2 (r0 + r1 e1) u_pp with its ring pair."""

    mv: Multivector
    ring0: RingElement
    ring1: RingElement
    spinor: DiracSpinor

    @classmethod
    def from_spinor(cls, d: DiracSpinor) -> "Ket":
        r0, r1 = ring_pair(d)
        return cls(mv=2.0 * g_spinor(d), ring0=r0, ring1=r1, spinor=d)


def bra(k: Ket) -> Multivector:
    """Reversed complex conjugate of the ket element."""
    return k.mv.conj().reverse()


def braket(bra_of: Ket, ket: Ket) -> complex:
    """Sesquilinear inner product with signature (+, +, -, -)."""
    return (bra(bra_of) * ket.mv).scalar_part


def braket_components(bra_of: DiracSpinor, ket: DiracSpinor) -> complex:
    """The same pairing evaluated directly on components."""
    f = bra_of.components
    w = ket.components
    return (f[0].conjugate() * w[0] + f[1].conjugate() * w[1]
            - f[2].conjugate() * w[2] - f[3].conjugate() * w[3])


# ---- kets in the E3+ ideal --------------------------------------------------


@dataclass(frozen=True)
class PauliKet:
    """Even-subalgebra ket sqrt(2) (r0 + r1 e1) E3+."""

    mv: Multivector
    ring0: RingElement
    ring1: RingElement

    @classmethod
    def from_ring_pair(cls, r0: RingElement, r1: RingElement) -> "PauliKet":
        mv = _SQRT2 * ((r0.to_multivector() + r1.to_multivector() * E1)
                       * E3_PLUS)
        return cls(mv=mv, ring0=r0, ring1=r1)

    @classmethod
    def from_spinor(cls, d: DiracSpinor) -> "PauliKet":
        r0, r1 = ring_pair(d)
        return cls.from_ring_pair(r0, r1)

    @property
    def spinor(self) -> DiracSpinor:
        return spinor_from_ring_pair(self.ring0, self.ring1)

    def ring_det(self) -> RingElement:
        return RingMatrix(r0=self.ring0, r1=self.ring1).det()

    def state(self) -> SphereState:
        return sphere_state(self.spinor)


def e_bra(k: PauliKet) -> Multivector:
    return k.mv.conj().reverse()


def e_inner(phi: PauliKet, omega: PauliKet) -> Multivector:
    """Product <phi|_E |omega>_E inside the even subalgebra."""
    return e_bra(phi) * omega.mv


def e_outer(omega: PauliKet) -> Multivector:
    """Rank-one element |omega>_E <omega|_E = 2 det A+ with the spin-up
    idempotent A+ of the state's axis."""
    return omega.mv * e_bra(omega)


def dirac_from_e(phi: PauliKet, omega: PauliKet) -> complex:
    """Full inner product recovered from the even-subalgebra product by
    averaging the four rest-frame conjugations."""
    a = e_inner(phi, omega)
    a_minus, a_dagger, a_star = pauli_conjugations(a)
    return ((a + a_minus + a_dagger + a_star) * 0.25).scalar_part


def dirac_from_e_simplified(phi: PauliKet, omega: PauliKet) -> complex:
    """Two-term shortcut (valid when :func:`special_condition` holds)."""
    a = e_inner(phi, omega)
    _, a_dagger, _ = pauli_conjugations(a)
    return ((a + a_dagger) * 0.5).scalar_part


def ket_from_pauli(k: PauliKet) -> Ket:
    """The u_pp ket of the same spinor: sqrt(2) |.>_E g0+."""
    mv = _SQRT2 * (k.mv * IDEMPOTENTS.gamma0_plus)
    return Ket(mv=mv, ring0=k.ring0, ring1=k.ring1, spinor=k.spinor)


def special_condition(a: SphereState, b: SphereState,
                      tol: float = 1e-10) -> bool:
    """True when the symmetric part of the two unit vectors is real and
    the e3-component of their antisymmetric part is purely pseudoscalar;
    then the two-term shortcut equals the full inner product."""
    w = RingElement.from_multivector(sym_product(a.m_hat, b.m_hat),
                                     strict=False)
    u = RingElement.from_multivector(
        sym_product(antisym_product(a.m_hat, b.m_hat), E3), strict=False)
    sym_real = max(abs(w.cI), abs(w.ciI)) <= tol
    anti_pseudo = max(abs(u.c1), abs(u.ci)) <= tol
    return sym_real and anti_pseudo


# ---- gauge ------------------------------------------------------------------


@dataclass(frozen=True)
class GaugeParams:
    """Angles of the gauge factor exp(I theta + J phi)."""

    theta: float
    phi: float

    def factor(self) -> RingElement:
        return RingElement(cI=self.theta, ciI=-self.phi).exp()


def gauge_transform(k: PauliKet, g: GaugeParams) -> PauliKet:
    f = g.factor()
    return PauliKet.from_ring_pair(f * k.ring0, f * k.ring1)


def gauge_normalize(k: PauliKet):
    """Gauge parameters making the ring determinant real positive and the
    r0 phase an ordinary complex phase; returns (normalized ket, params).

    The determinant picks up exp(2 I theta) under the gauge factor, so
    theta is read from its pseudoscalar angle; phi cancels the hyperbolic
    imbalance of r0's two C components.
    """
    det = k.ring_det()
    det.inverse()  # raises ZeroDivisorError on singular states
    theta1 = 0.5 * math.atan2(det.cI, det.c1)
    p0, m0 = k.ring0.split
    if abs(p0) < 1e-300 or abs(m0) < 1e-300:
        from .errors import ZeroDivisorError
        raise ZeroDivisorError("r0 is singular; no gauge phase exists")
    phi2 = 0.5 * math.log(abs(p0) / abs(m0))
    params = GaugeParams(theta=-theta1, phi=-phi2)
    return gauge_transform(k, params), params


def is_gauge_normalized(k: PauliKet, tol: float = 1e-9) -> bool:
    det = k.ring_det()
    p0, m0 = k.ring0.split
    return (max(abs(det.ci), abs(det.cI), abs(det.ciI)) <= tol
            and abs(abs(p0) - abs(m0)) <= tol * max(1.0, abs(p0)))


def normalize_physical(k: PauliKet) -> PauliKet:
    """Gauge normalize and rescale so the ring determinant becomes 1."""
    normed, _ = gauge_normalize(k)
    det = normed.ring_det()
    scale = det.sqrt().inverse()
    return PauliKet.from_ring_pair(scale * normed.ring0,
                                   scale * normed.ring1)


def is_physical(k: PauliKet, tol: float = 1e-9) -> bool:
    return k.ring_det().allclose(R_ONE, tol)


# ---- transition probabilities ----------------------------------------------


def spin_up_along(axis: Multivector) -> Multivector:
    """Idempotent (1 + J a)/2 of a unit complex axis."""
    return (ONE + J_UNIT * axis) * 0.5


def transition_probability(a: SphereState, b: SphereState,
                           check_tol: float = 1e-10) -> Multivector:
    """(1 + a_hat_a o a_hat_b)/2 as a span{1, I} value.

    Evaluated through the triple idempotent product of the two spin-up
    projectors and, independently, through the projective form
    1 - (M_a - M_b)^2 / (M_a^2 M_b^2); the two must agree to check_tol.
    Values with a pseudoscalar part or outside [0, 1] arise for states
    in different inertial systems and are not probabilities (see
    :func:`is_probability_value`).
    """
    up_a = spin_up_along(a.a_hat)
    up_b = spin_up_along(b.a_hat)
    triple = up_a * up_b * up_a
    value1 = RingElement.from_multivector(triple) * 2.0

    diff = a.m - b.m
    num = RingElement.from_multivector(diff * diff, strict=True)
    den = a.m_squared * b.m_squared
    value2 = R_ONE - num * den.inverse()

    if not value1.allclose(value2, check_tol):
        raise AlgebraError(
            "idempotent and projective probability paths disagree: "
            f"{value1!r} vs {value2!r}")
    return value1.to_multivector()


def is_probability_value(value: Multivector, i_tol: float = 1e-10,
                         bound_slack: float = 1e-12) -> bool:
    r = RingElement.from_multivector(value, strict=False)
    if max(abs(r.ci), abs(r.ciI)) > i_tol or abs(r.cI) > i_tol:
        return False
    return -bound_slack <= r.c1 <= 1.0 + bound_slack


# ---- the planar family ------------------------------------------------------


def family_state(x, phi_x: float) -> SphereState:
    """Sphere state of the planar family exp(phi e3) x + e3."""
    return sphere_state(family_spinor(x, phi_x))


def family_probability(x, phi_x: float, y, phi_y: float):
    """Closed-form transition value between two family states.

    Returns (value, is_probability).  The value is
    1 - (x^2 + y^2 - 2 (cosh(dp) x.y + sinh(dp) e3^x^y)) / ((1+x^2)(1+y^2))
    with dp = phi_x - phi_y; the trivector term contributes the
    pseudoscalar part (x1 y2 - x2 y1) I.
    """
    x1, x2 = float(x[0]), float(x[1])
    y1, y2 = float(y[0]), float(y[1])
    xx = x1 * x1 + x2 * x2
    yy = y1 * y1 + y2 * y2
    dot = x1 * y1 + x2 * y2
    wedge3 = x1 * y2 - x2 * y1
    dp = phi_x - phi_y
    den = (1.0 + xx) * (1.0 + yy)
    real_part = 1.0 - (xx + yy - 2.0 * math.cosh(dp) * dot) / den
    pseudo_part = 2.0 * math.sinh(dp) * wedge3 / den
    value = RingElement(c1=real_part, cI=pseudo_part).to_multivector()
    return value, is_probability_value(value)
