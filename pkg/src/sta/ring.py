"""The commutative scalar ring spanned by {1, i, I, iI}.

I is the pseudoscalar of Cl(1,3) and i the commuting imaginary unit, so
this span is closed under multiplication (I*I = -1, (iI)*(iI) = +1) and
commutative.  Under the projectors (1 +- J)/2 with J = -iI it splits as
C + C: an element corresponds to an ordered pair of ordinary complex
numbers, one per projector, and is invertible exactly when both are
nonzero.  Division, square roots, exponentials and logarithms are
evaluated componentwise in that splitting (principal branches).

Elements of this ring are the scalars of the even subalgebra: they
commute with every even multivector, so the 2x2 matrices over the ring
in :mod:`sta.matrices` behave like generalized Pauli matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import cmath

import numpy as np

from .algebra import Multivector
from .errors import ZeroDivisorError

#: projection magnitude below which an element counts as a zero divisor
ZERO_DIVISOR_TOL = 1e-12


@dataclass(frozen=True)
class RingElement:
    """Coordinates (c1, ci, cI, ciI) in the basis {1, i, I, iI}."""

    c1: float = 0.0
    ci: float = 0.0
    cI: float = 0.0
    ciI: float = 0.0

    def __post_init__(self):
        for v in (self.c1, self.ci, self.cI, self.ciI):
            if not np.isfinite(v):
                raise ValueError("non-finite ring coordinate")

    # ---- C + C splitting under (1 +- J)/2 -----------------------------

    @property
    def split(self) -> tuple[complex, complex]:
        """Components on the projectors (1+J)/2 and (1-J)/2."""
        p = complex(self.c1 - self.ciI, self.ci + self.cI)
        m = complex(self.c1 + self.ciI, self.ci - self.cI)
        return p, m

    @classmethod
    def from_split(cls, p: complex, m: complex) -> "RingElement":
        p, m = complex(p), complex(m)
        return cls(
            c1=(p.real + m.real) / 2.0,
            ci=(p.imag + m.imag) / 2.0,
            cI=(p.imag - m.imag) / 2.0,
            ciI=(m.real - p.real) / 2.0,
        )

    # ---- other constructors -------------------------------------------

    @classmethod
    def scalar(cls, z) -> "RingElement":
        z = complex(z)
        return cls(c1=z.real, ci=z.imag)

    @classmethod
    def from_complex_pair(cls, a, b) -> "RingElement":
        """The element a + J b for ordinary complex a, b."""
        a, b = complex(a), complex(b)
        return cls(c1=a.real, ci=a.imag, cI=b.imag, ciI=-b.real)

    @property
    def complex_pair(self) -> tuple[complex, complex]:
        """Inverse of :meth:`from_complex_pair`: (a, b) with self = a + J b."""
        return complex(self.c1, self.ci), complex(-self.ciI, self.cI)

    @classmethod
    def from_multivector(cls, g: Multivector, strict: bool = False,
                         tol: float = 1e-9) -> "RingElement":
        """Read the grade-0 plus grade-4 part of a multivector."""
        c0 = complex(g.coeffs[0])
        c15 = complex(g.coeffs[15])
        if strict:
            rest = g.coeffs.copy()
            rest[0] = 0.0
            rest[15] = 0.0
            if np.abs(rest).max() > tol:
                raise ValueError("multivector is not in span{1,i,I,iI}")
        return cls(c1=c0.real, ci=c0.imag, cI=c15.real, ciI=c15.imag)

    def to_multivector(self) -> Multivector:
        c = np.zeros(16, dtype=complex)
        c[0] = complex(self.c1, self.ci)
        c[15] = complex(self.cI, self.ciI)
        return Multivector(c)

    # ---- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return RingElement(self.c1 + other.c1, self.ci + other.ci,
                           self.cI + other.cI, self.ciI + other.ciI)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return RingElement(self.c1 - other.c1, self.ci - other.ci,
                           self.cI - other.cI, self.ciI - other.ciI)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return RingElement(-self.c1, -self.ci, -self.cI, -self.ciI)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self.to_multivector() * other
        other = _coerce(other)
        p1, m1 = self.split
        p2, m2 = other.split
        return RingElement.from_split(p1 * p2, m1 * m2)

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return other * self.to_multivector()
        return self * other

    def conj_i(self) -> "RingElement":
        """i -> -i (flips both J and the ordinary imaginary part)."""
        return RingElement(self.c1, -self.ci, self.cI, -self.ciI)

    def conj_I(self) -> "RingElement":
        """I -> -I; this is also reversion restricted to the ring."""
        return RingElement(self.c1, self.ci, -self.cI, -self.ciI)

    def inverse(self, tol: float = ZERO_DIVISOR_TOL) -> "RingElement":
        p, m = self._regular_split(tol)
        return RingElement.from_split(1.0 / p, 1.0 / m)

    def sqrt(self, tol: float = ZERO_DIVISOR_TOL) -> "RingElement":
        """Principal square root in each C component; sqrt(a)**2 == a."""
        p, m = self._regular_split(tol)
        return RingElement.from_split(cmath.sqrt(p), cmath.sqrt(m))

    def exp(self) -> "RingElement":
        p, m = self.split
        return RingElement.from_split(cmath.exp(p), cmath.exp(m))

    def log(self, tol: float = ZERO_DIVISOR_TOL) -> "RingElement":
        p, m = self._regular_split(tol)
        return RingElement.from_split(cmath.log(p), cmath.log(m))

    def _regular_split(self, tol):
        p, m = self.split
        if abs(p) < tol or abs(m) < tol:
            raise ZeroDivisorError(
                f"ring element has a vanishing projection (|p|={abs(p):.2e}, "
                f"|m|={abs(m):.2e})")
        return p, m

    # ---- predicates ------------------------------------------------------

    def magnitude(self) -> float:
        """max of the two C-component magnitudes."""
        p, m = self.split
        return max(abs(p), abs(m))

    def is_zero(self, tol: float = 1e-12) -> bool:
        return self.magnitude() <= tol

    def is_zero_divisor(self, tol: float = ZERO_DIVISOR_TOL) -> bool:
        p, m = self.split
        return min(abs(p), abs(m)) < tol

    def is_real_scalar(self, tol: float = 1e-12) -> bool:
        return max(abs(self.ci), abs(self.cI), abs(self.ciI)) <= tol

    def in_one_I_span(self, tol: float = 1e-12) -> bool:
        """True when the element lies in span{1, I}."""
        return max(abs(self.ci), abs(self.ciI)) <= tol

    def allclose(self, other, tol: float = 1e-10) -> bool:
        other = _coerce(other)
        return max(abs(self.c1 - other.c1), abs(self.ci - other.ci),
                   abs(self.cI - other.cI), abs(self.ciI - other.ciI)) <= tol

    def pauli_substitute(self) -> "RingElement":
        """Replace i by I (so J becomes 1), landing in span{1, I}.

        Applied entrywise to the 2x2 representation this recovers the
        ordinary Pauli matrices over span{1, I}.
        """
        return RingElement(c1=self.c1 - self.ciI, ci=0.0,
                           cI=self.ci + self.cI, ciI=0.0)

    def __repr__(self):
        return (f"RingElement({self.c1:g}{self.ci:+g}i{self.cI:+g}I"
                f"{self.ciI:+g}iI)")


def _coerce(x) -> RingElement:
    if isinstance(x, RingElement):
        return x
    if isinstance(x, (int, float, complex)):
        return RingElement.scalar(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as RingElement")


R_ZERO = RingElement()
R_ONE = RingElement(c1=1.0)
R_I_UNIT = RingElement(ci=1.0)
R_PSEUDO = RingElement(cI=1.0)
R_J = RingElement(ciI=-1.0)  # J = -i I
