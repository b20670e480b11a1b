"""Seeded splitmix64 generator and random algebra elements.

A tiny 64-bit mixer keeps the random suites reproducible across
platforms without depending on numpy's generator internals: the same
seed always yields the same sample stream, byte for byte.
"""

from __future__ import annotations

from .algebra import GRADES, Multivector
from .ring import RingElement
from .spinors import DiracSpinor, SpinorOperator, ring_pair, spinor_operator

_MASK64 = (1 << 64) - 1
_GAMMA_STEP = 0x9E3779B97F4A7C15

#: ring-determinant magnitude below which a random spinor is rejected
#: by the regular-spinor generator
REGULAR_DET_MIN = 0.1


class SplitMix64:
    """splitmix64 stream; uniform doubles come from the top 53 bits."""

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA_STEP) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: float = -1.0, hi: float = 1.0) -> float:
        u = (self.next_u64() >> 11) * (1.0 / (1 << 53))
        return lo + (hi - lo) * u

    def complex_uniform(self, scale: float = 1.0) -> complex:
        return complex(self.uniform() * scale, self.uniform() * scale)


def random_multivector(rng: SplitMix64, scale: float = 1.0) -> Multivector:
    return Multivector([rng.complex_uniform(scale) for _ in range(16)])


def random_real_multivector(rng: SplitMix64, scale: float = 1.0) -> Multivector:
    return Multivector([rng.uniform() * scale for _ in range(16)])


def random_vector(rng: SplitMix64, scale: float = 1.0) -> Multivector:
    coeffs = [rng.uniform() * scale if GRADES[m] == 1 else 0.0
              for m in range(16)]
    return Multivector(coeffs)


def random_bivector(rng: SplitMix64, scale: float = 1.0) -> Multivector:
    coeffs = [rng.uniform() * scale if GRADES[m] == 2 else 0.0
              for m in range(16)]
    return Multivector(coeffs)


def random_spinor(rng: SplitMix64) -> DiracSpinor:
    return DiracSpinor(rng.complex_uniform(), rng.complex_uniform(),
                       rng.complex_uniform(), rng.complex_uniform())


def random_regular_spinor(rng: SplitMix64,
                          min_det: float = REGULAR_DET_MIN,
                          max_tries: int = 10000) -> DiracSpinor:
    """Uniform components in [-1, 1]^2, rejected while the ring
    determinant magnitude stays below min_det."""
    for _ in range(max_tries):
        d = random_spinor(rng)
        r0, r1 = ring_pair(d)
        det = r0 * r0.conj_i() - r1.conj_i() * r1
        if det.magnitude() >= min_det:
            return d
    raise RuntimeError("rejection sampling failed to find a regular spinor")


def random_operator(rng: SplitMix64, regular: bool = True) -> SpinorOperator:
    d = random_regular_spinor(rng) if regular else random_spinor(rng)
    return spinor_operator(d)


def random_ring_element(rng: SplitMix64, scale: float = 1.0) -> RingElement:
    return RingElement(rng.uniform() * scale, rng.uniform() * scale,
                       rng.uniform() * scale, rng.uniform() * scale)
