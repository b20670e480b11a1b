"""Spectral-basis isomorphism between Cl(1,3) over C and 4x4 complex matrices.

The primitive idempotent u_pp = (1/4)(1 + g0)(1 + i g12) and its three
partners (signs flipped on either factor) are mutually annihilating and
partition unity.  Bordering u_pp with the factors (1, e13, e3, e1) on the
left and (1, -e13, e3, e1) on the right produces the 4x4 spectral basis,
and reading coordinates of g * (border_k u_pp) inside the minimal left
ideal yields the complex Dirac matrix [g].  The map is an algebra
isomorphism, so determinants and inverses of multivectors reduce to
ordinary 4x4 linear algebra.

The even subalgebra additionally carries a 2x2 representation over the
commutative ring span{1, i, I, iI}: a real even element is determined by
an ordered ring pair (r0, r1) and represented by the constrained matrix
[[r0, conj_i(r1)], [r1, conj_i(r0)]].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (G0, E1, E12, E13, E3, Multivector, PSEUDOSCALAR, ONE)
from .errors import SingularError
from .ring import RingElement, R_J

_PIVOT_TOL = 1e-14


# ---- idempotent structure ------------------------------------------------


@dataclass(frozen=True)
class IdempotentSet:
    """The four primitive idempotents and their commuting factors."""

    u_pp: Multivector
    u_pm: Multivector
    u_mp: Multivector
    u_mm: Multivector
    gamma0_plus: Multivector
    gamma0_minus: Multivector
    e3_plus: Multivector
    e3_minus: Multivector

    def all_four(self):
        return (self.u_pp, self.u_pm, self.u_mp, self.u_mm)


def _build_idempotents() -> IdempotentSet:
    ig12 = E12 * (-1j)        # i g12 = -i e12 = J e3
    half = 0.5
    gp = (ONE + G0) * half
    gm = (ONE - G0) * half
    ep = (ONE + ig12) * half
    em = (ONE - ig12) * half
    return IdempotentSet(
        u_pp=gp * ep, u_pm=gp * em, u_mp=gm * ep, u_mm=gm * em,
        gamma0_plus=gp, gamma0_minus=gm, e3_plus=ep, e3_minus=em,
    )


IDEMPOTENTS = _build_idempotents()

#: spin projector along e3 in the even subalgebra, (1 + J e3)/2
E3_PLUS = IDEMPOTENTS.e3_plus
E3_MINUS = IDEMPOTENTS.e3_minus

#: the element J e3 = E3_PLUS - E3_MINUS
E3_AXIS = R_J.to_multivector() * E3

_LEFT_BORDER = (ONE, E13, E3, E1)
_RIGHT_BORDER = (ONE, -E13, E3, E1)

#: column generators of the minimal left ideal
IDEAL_BASIS = tuple(b * IDEMPOTENTS.u_pp for b in _LEFT_BORDER)


def _build_extraction():
    # The four ideal generators occupy disjoint blade quartets, so each
    # coordinate can be read off a single blade slot exactly.
    slots = []
    for j, f in enumerate(IDEAL_BASIS):
        for mask in range(16):
            c = f.coeffs[mask]
            if abs(c) > 0.1 and all(
                    abs(IDEAL_BASIS[k].coeffs[mask]) == 0.0
                    for k in range(4) if k != j):
                slots.append((mask, 1.0 / c))
                break
        else:
            raise RuntimeError("ideal basis lost its disjoint support")
    return tuple(slots)


_EXTRACT_SLOTS = _build_extraction()


def spectral_basis():
    """4x4 array of ideal elements; entry (j, k) is left_j * u_pp * right_k."""
    u = IDEMPOTENTS.u_pp
    return [[_LEFT_BORDER[j] * u * _RIGHT_BORDER[k] for k in range(4)]
            for j in range(4)]


_SPEC_TENSOR = np.stack([
    np.stack([(_LEFT_BORDER[j] * IDEMPOTENTS.u_pp * _RIGHT_BORDER[k]).coeffs
              for k in range(4)])
    for j in range(4)])  # shape (4, 4, 16)


def ideal_coordinates(t: Multivector) -> np.ndarray:
    """Coordinates of an element of the minimal left ideal in IDEAL_BASIS."""
    return np.array([t.coeffs[mask] * factor for mask, factor in _EXTRACT_SLOTS])


def to_matrix(g: Multivector) -> np.ndarray:
    """Complex Dirac matrix of g: column k holds the ideal coordinates
    of g times the k-th ideal generator."""
    m = np.empty((4, 4), dtype=complex)
    for k in range(4):
        m[:, k] = ideal_coordinates(g * IDEAL_BASIS[k])
    return m


def from_matrix(m) -> Multivector:
    """Two-sided inverse of :func:`to_matrix`."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    return Multivector(np.einsum("jk,jkc->c", m, _SPEC_TENSOR))


# ---- 4x4 linear algebra ---------------------------------------------------


def det4(m) -> complex:
    """Determinant by LU factorization with partial pivoting."""
    a = np.array(m, dtype=complex)
    if a.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    det = 1.0 + 0.0j
    for col in range(4):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[piv, col]) < _PIVOT_TOL:
            return 0.0j
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        det *= a[col, col]
        factors = a[col + 1:, col] / a[col, col]
        a[col + 1:] -= factors[:, None] * a[col]
    return complex(det)


def inverse4(m) -> np.ndarray:
    """Inverse by Gauss-Jordan elimination with partial pivoting."""
    a = np.array(m, dtype=complex)
    if a.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    aug = np.hstack([a, np.eye(4, dtype=complex)])
    for col in range(4):
        piv = col + int(np.argmax(np.abs(aug[col:, col])))
        if abs(aug[piv, col]) < _PIVOT_TOL:
            raise SingularError("singular 4x4 matrix")
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        aug[col] = aug[col] / aug[col, col]
        for row in range(4):
            if row != col:
                aug[row] -= aug[row, col] * aug[col]
    return aug[:, 4:]


# ---- 2x2 representation over the ring --------------------------------------


@dataclass(frozen=True)
class RingMatrix:
    """Constrained 2x2 matrix [[r0, conj_i(r1)], [r1, conj_i(r0)]].

    Only the pair (r0, r1) is stored; the conjugate entries are views,
    which keeps the constraint impossible to violate.
    """

    r0: RingElement
    r1: RingElement

    def entries(self):
        return ((self.r0, self.r1.conj_i()),
                (self.r1, self.r0.conj_i()))

    def det(self) -> RingElement:
        return self.r0 * self.r0.conj_i() - self.r1.conj_i() * self.r1

    def __mul__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        # block form of ordinary 2x2 multiplication; closure under the
        # constraint follows from conj_i being a ring automorphism
        return RingMatrix(
            r0=self.r0 * other.r0 + self.r1.conj_i() * other.r1,
            r1=self.r1 * other.r0 + self.r0.conj_i() * other.r1,
        )

    def allclose(self, other, tol: float = 1e-10) -> bool:
        return (self.r0.allclose(other.r0, tol)
                and self.r1.allclose(other.r1, tol))


def e_matrices():
    """Ring-matrix images of (1, e1, e2, e3).

    Substituting i -> I in every entry (J -> 1) turns these into the
    ordinary Pauli matrices over span{1, I}.
    """
    one = RingElement.scalar(1.0)
    return (
        RingMatrix(r0=one, r1=RingElement.scalar(0.0)),
        RingMatrix(r0=RingElement.scalar(0.0), r1=one),
        RingMatrix(r0=RingElement.scalar(0.0), r1=RingElement.scalar(1j)),
        RingMatrix(r0=R_J, r1=RingElement.scalar(0.0)),
    )


def spinor_ring_pair(psi: Multivector):
    """Ring pair (r0, r1) of a real even multivector.

    The first matrix column of the element is a Dirac spinor
    (p1, p2, p3, p4); the pair is r0 = p1 + J p3, r1 = p4 + J p2.
    """
    col = to_matrix(psi)[:, 0]
    r0 = RingElement.from_complex_pair(col[0], col[2])
    r1 = RingElement.from_complex_pair(col[3], col[1])
    return r0, r1


def even_from_ring_pair(r0: RingElement, r1: RingElement) -> Multivector:
    """Reassemble the even element (r0 + r1 e1) E3+ + conj (E3-)."""
    omega = r0.to_multivector() + r1.to_multivector() * E1
    omega_bar = r0.conj_i().to_multivector() + r1.conj_i().to_multivector() * E1
    return omega * E3_PLUS + omega_bar * E3_MINUS


def ring_matrix(psi, reconstruction_tol: float = 1e-9) -> RingMatrix:
    """2x2 ring representation of a spinor operator.

    Accepts a SpinorOperator (cached pair) or a real even Multivector.
    Rejects odd input, and complex even input that no ring pair can
    reproduce.
    """
    if hasattr(psi, "ring0") and hasattr(psi, "ring1"):
        return RingMatrix(r0=psi.ring0, r1=psi.ring1)
    if not isinstance(psi, Multivector):
        raise TypeError("expected SpinorOperator or Multivector")
    if not psi.is_even():
        raise ValueError("ring representation needs an even multivector")
    r0, r1 = spinor_ring_pair(psi)
    if even_from_ring_pair(r0, r1).max_diff(psi) > reconstruction_tol:
        raise ValueError("even multivector is not real: no constrained "
                         "ring matrix represents it")
    return RingMatrix(r0=r0, r1=r1)


def ring_determinant(psi) -> RingElement:
    """Determinant of the 2x2 ring representation.

    In spinor components this is |p1|^2 + |p2|^2 - |p3|^2 - |p4|^2
    + 2 im(conj(p1) p3 + conj(p2) p4) I, a span{1, I} value whose squared
    magnitude equals the 4x4 determinant.
    """
    return ring_matrix(psi).det()


def gamma_matrices():
    """The four matrices [g_mu] of the spacetime generators."""
    from .algebra import GAMMA
    return tuple(to_matrix(g) for g in GAMMA)
