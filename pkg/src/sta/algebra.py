"""Dense arithmetic for the complexified spacetime algebra Cl(1,3).

The algebra is generated by four orthonormal vectors g0, g1, g2, g3 with
g0^2 = +1 and gk^2 = -1 (metric +,-,-,-).  Its 16 basis blades are indexed
by a 4-bit mask: bit mu set means g_mu is a factor, factors written in
ascending index order.  Coefficients are complex; the scalar imaginary
unit i commutes with everything and is independent of the pseudoscalar
I = g0123, which anticommutes with every spacetime vector.

The rest frame of g0 embeds the Pauli algebra of space as the even
subalgebra via e_k = g_k g_0.  Then e1 e2 e3 equals the pseudoscalar I,
and J = -i I squares to +1 and is central in the even subalgebra; the
commutative span of {1, i, I, iI} (see :mod:`sta.ring`) acts as the
scalar ring of that subalgebra.

Products are evaluated through a precomputed Cayley table.  Blade signs
follow the standard convention: count the transpositions needed to sort
the concatenated factor list, then contract repeated generators with the
metric.
"""

from __future__ import annotations

import numpy as np

DIM = 16
METRIC = (1.0, -1.0, -1.0, -1.0)

#: default absolute tolerance for coefficient comparisons
DEFAULT_TOL = 1e-10

_EXP_SERIES_CUTOFF = 1e-16
_EXP_SCALE_LIMIT = 0.5
_OVERFLOW_LIMIT = 1e300
_SINGULAR_DET = 1e-12


def blade_grade(mask: int) -> int:
    """Number of generators in the blade (popcount of the mask)."""
    return bin(mask).count("1")


def blade_name(mask: int) -> str:
    """Canonical name of a basis blade, e.g. 6 -> 'g12'."""
    if mask == 0:
        return "1"
    return "g" + "".join(str(mu) for mu in range(4) if (mask >> mu) & 1)


def _product_sign(a: int, b: int) -> float:
    # transpositions to interleave the two ascending index lists...
    swaps = 0
    t = a >> 1
    while t:
        swaps += bin(t & b).count("1")
        t >>= 1
    sign = -1.0 if swaps & 1 else 1.0
    # ...then metric contraction of the repeated generators
    common = a & b
    for mu in range(4):
        if (common >> mu) & 1:
            sign *= METRIC[mu]
    return sign


GRADES = np.array([blade_grade(m) for m in range(DIM)])

# Per-blade signs of the grade-based conjugations.
REVERSE_SIGNS = np.where(GRADES % 4 >= 2, -1.0, 1.0)      # (-1)^(k(k-1)/2)
INVOLUTE_SIGNS = np.where(GRADES % 2 == 1, -1.0, 1.0)     # (-1)^k

# Gather form of the Cayley table: blade(i) * blade(j) = sign(i,j) blade(i^j),
# so component k of a product collects pairs (i, i^k).
_PAIR_INDEX = np.arange(DIM)[None, :] ^ np.arange(DIM)[:, None]   # [k, i] -> i^k
_SIGN_TABLE = np.array([[_product_sign(a, b) for b in range(DIM)]
                        for a in range(DIM)])
_PAIR_SIGN = _SIGN_TABLE[np.arange(DIM)[None, :], _PAIR_INDEX]    # [k, i]

_OUTER_OK = np.array([[GRADES[i ^ j] == GRADES[i] + GRADES[j]
                       for j in range(DIM)] for i in range(DIM)])
_INNER_OK = np.array([[GRADES[i ^ j] == abs(GRADES[i] - GRADES[j])
                       and GRADES[i] > 0 and GRADES[j] > 0
                       for j in range(DIM)] for i in range(DIM)])
_PAIR_SIGN_OUTER = _PAIR_SIGN * _OUTER_OK[np.arange(DIM)[None, :], _PAIR_INDEX]
_PAIR_SIGN_INNER = _PAIR_SIGN * _INNER_OK[np.arange(DIM)[None, :], _PAIR_INDEX]


def _raw_product(x, y, pair_sign):
    return ((x[np.newaxis, :] * y[_PAIR_INDEX]) * pair_sign).sum(axis=1)


class Multivector:
    """Element of Cl(1,3) over the complex numbers: 16 complex coefficients.

    Values are immutable; every operation returns a fresh instance, so
    instances are safe to share between threads.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=complex)
        if arr.shape != (DIM,):
            raise ValueError(f"expected {DIM} coefficients, got shape {arr.shape}")
        if not np.all(np.isfinite(arr.view(float))):
            raise ValueError("non-finite coefficient")
        arr.flags.writeable = False
        self.coeffs = arr

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Multivector":
        return cls(np.zeros(DIM, dtype=complex))

    @classmethod
    def scalar(cls, value) -> "Multivector":
        c = np.zeros(DIM, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def blade(cls, mask: int, value=1.0) -> "Multivector":
        if not 0 <= mask < DIM:
            raise ValueError("blade mask out of range")
        c = np.zeros(DIM, dtype=complex)
        c[mask] = value
        return cls(c)

    # ---- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return Multivector(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return Multivector(self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return Multivector(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return Multivector(_raw_product(self.coeffs, other.coeffs, _PAIR_SIGN))
        if isinstance(other, (int, float, complex)):
            return Multivector(self.coeffs * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Multivector(self.coeffs * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return Multivector(self.coeffs / other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return inverse(self) ** (-n)
        out = Multivector.scalar(1.0)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # ---- structure ----------------------------------------------------

    def grade(self, k: int) -> "Multivector":
        if not 0 <= k <= 4:
            raise ValueError("grade must be in 0..4")
        return Multivector(np.where(GRADES == k, self.coeffs, 0.0))

    def even(self) -> "Multivector":
        return Multivector(np.where(GRADES % 2 == 0, self.coeffs, 0.0))

    def odd(self) -> "Multivector":
        return Multivector(np.where(GRADES % 2 == 1, self.coeffs, 0.0))

    def is_even(self, tol: float = 1e-12) -> bool:
        return float(np.abs(self.odd().coeffs).max()) <= tol

    def reverse(self) -> "Multivector":
        return Multivector(self.coeffs * REVERSE_SIGNS)

    def involute(self) -> "Multivector":
        return Multivector(self.coeffs * INVOLUTE_SIGNS)

    def conj(self) -> "Multivector":
        """Complex conjugation i -> -i on the coefficients only."""
        return Multivector(np.conj(self.coeffs))

    def star(self) -> "Multivector":
        """Composition of grade involution and complex conjugation."""
        return Multivector(np.conj(self.coeffs) * INVOLUTE_SIGNS)

    @property
    def scalar_part(self) -> complex:
        """Complex coefficient of the empty blade (the <.>_C projection
        in the g0 rest frame)."""
        return complex(self.coeffs[0])

    def max_abs(self) -> float:
        return float(np.abs(self.coeffs).max())

    def allclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        other = _coerce(other)
        return float(np.abs(self.coeffs - other.coeffs).max()) <= tol

    def max_diff(self, other) -> float:
        other = _coerce(other)
        return float(np.abs(self.coeffs - other.coeffs).max())

    def is_zero(self, tol: float = DEFAULT_TOL) -> bool:
        return self.max_abs() <= tol

    def __eq__(self, other):
        if isinstance(other, (int, float, complex)):
            other = Multivector.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        return f"Multivector({format_multivector(self)})"


def _coerce(x) -> Multivector:
    if isinstance(x, Multivector):
        return x
    if isinstance(x, (int, float, complex)):
        return Multivector.scalar(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as Multivector")


# ---- spec operations as free functions --------------------------------


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return _coerce(a) * _coerce(b)


def grade_project(g: Multivector, k: int) -> Multivector:
    return _coerce(g).grade(k)


def reverse(g: Multivector) -> Multivector:
    return _coerce(g).reverse()


def grade_involute(g: Multivector) -> Multivector:
    return _coerce(g).involute()


def complex_conjugate(g: Multivector) -> Multivector:
    return _coerce(g).conj()


def star(g: Multivector) -> Multivector:
    return _coerce(g).star()


def sym_product(a: Multivector, b: Multivector) -> Multivector:
    """Symmetric half of the geometric product, (ab + ba)/2."""
    a, b = _coerce(a), _coerce(b)
    return (a * b + b * a) * 0.5


def antisym_product(a: Multivector, b: Multivector) -> Multivector:
    """Antisymmetric half of the geometric product, (ab - ba)/2."""
    a, b = _coerce(a), _coerce(b)
    return (a * b - b * a) * 0.5


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Grade-raising outer product."""
    a, b = _coerce(a), _coerce(b)
    return Multivector(_raw_product(a.coeffs, b.coeffs, _PAIR_SIGN_OUTER))


def inner(a: Multivector, b: Multivector) -> Multivector:
    """Grade-lowering inner product (zero when either factor is a scalar)."""
    a, b = _coerce(a), _coerce(b)
    return Multivector(_raw_product(a.coeffs, b.coeffs, _PAIR_SIGN_INNER))


def cross(a: Multivector, b: Multivector) -> Multivector:
    """Vector cross product of the embedded space algebra, -I (a^b)."""
    return -(PSEUDOSCALAR * antisym_product(a, b))


def pauli_embed(k: int) -> Multivector:
    """Rest-frame space vector e_k = g_k g_0 for k in 1..3."""
    if k not in (1, 2, 3):
        raise ValueError("pauli index must be 1, 2 or 3")
    return (E1, E2, E3)[k - 1]


def pauli_conjugations(g: Multivector):
    """The three rest-frame conjugations (g^-, g^dagger, g^*).

    g^- = g0 g g0 flips space vectors, g^dagger = g0 ~g g0 is Hermitian
    conjugation in the g0 frame, and g^* = ~g is their composition, the
    full reverse.
    """
    g = _coerce(g)
    g_star = g.reverse()
    return G0 * g * G0, G0 * g_star * G0, g_star


def exp(g: Multivector, series_tol: float = _EXP_SERIES_CUTOFF) -> Multivector:
    """Power-series exponential, by scaling and squaring.

    The argument is halved until its largest coefficient is at most 0.5,
    the series is summed until the term norm drops below ``series_tol``,
    and the result is squared back up.  Raises OverflowError if any
    intermediate coefficient magnitude exceeds 1e300.
    """
    g = _coerce(g)
    squarings = 0
    m = g.max_abs()
    if m > _EXP_SCALE_LIMIT:
        squarings = int(np.ceil(np.log2(m / _EXP_SCALE_LIMIT)))
        g = g * (0.5 ** squarings)
    total = Multivector.scalar(1.0)
    term = Multivector.scalar(1.0)
    for k in range(1, 256):
        term = term * g * (1.0 / k)
        total = total + term
        if term.max_abs() < series_tol:
            break
    for _ in range(squarings):
        # squaring multiplies magnitudes; guard before the product so no
        # non-finite intermediate is ever formed
        if total.max_abs() > 1e148:
            raise OverflowError("exponential overflow: coefficient above 1e300")
        total = total * total
        if total.max_abs() > _OVERFLOW_LIMIT:
            raise OverflowError("exponential overflow: coefficient above 1e300")
    return total


def inverse(g: Multivector, det_tol: float = _SINGULAR_DET) -> Multivector:
    """Multiplicative inverse through the 4x4 matrix representation.

    Raises SingularError when |det| of the representation falls below
    ``det_tol``, which signals a zero divisor (any idempotent, for
    instance).
    """
    from . import matrices
    from .errors import SingularError

    g = _coerce(g)
    m = matrices.to_matrix(g)
    det = matrices.det4(m)
    if abs(det) < det_tol:
        raise SingularError(
            f"multivector is a zero divisor (matrix determinant {abs(det):.2e})")
    return matrices.from_matrix(matrices.inverse4(m))


# ---- formatting --------------------------------------------------------

_PRINT_ORDER = sorted(range(DIM), key=lambda m: (GRADES[m], m))


def _fmt_real(x: float) -> str:
    out = f"{x:.12g}"
    return "0" if out == "-0" else out


def format_complex(z: complex) -> str:
    """Render a complex coefficient: plain real, 'bi', or '(a+bi)'."""
    re, im = z.real, z.imag
    if im == 0.0:
        return _fmt_real(re)
    if re == 0.0:
        return _fmt_real(im) + "i"
    return f"({_fmt_real(re)}{im:+.12g}i)"


def format_multivector(g: Multivector, zero_tol: float = 1e-12) -> str:
    """Nonzero blade coefficients in canonical (grade, mask) order."""
    terms = []
    for mask in _PRINT_ORDER:
        z = complex(g.coeffs[mask])
        if abs(z) <= zero_tol:
            continue
        terms.append(f"{format_complex(z)}·{blade_name(mask)}")
    if not terms:
        return "0"
    return " + ".join(terms)


# ---- basis constants ----------------------------------------------------

ONE = Multivector.scalar(1.0)
ZERO = Multivector.zero()
G0 = Multivector.blade(0b0001)
G1 = Multivector.blade(0b0010)
G2 = Multivector.blade(0b0100)
G3 = Multivector.blade(0b1000)
GAMMA = (G0, G1, G2, G3)

E1 = G1 * G0
E2 = G2 * G0
E3 = G3 * G0
E_VECTORS = (E1, E2, E3)
E12 = E1 * E2
E13 = E1 * E3
E23 = E2 * E3

#: pseudoscalar I = g0123 = e1 e2 e3; I*I = -1 and I anticommutes with
#: every g_mu while commuting with the whole even subalgebra
PSEUDOSCALAR = G0 * G1 * G2 * G3

#: J = -i I; J*J = +1, central in the even subalgebra
J_UNIT = PSEUDOSCALAR * (-1j)
