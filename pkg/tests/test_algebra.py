"""Core algebra: products, grades, conjugations, exponentials, the ring."""

import math

import numpy as np
import pytest

from sta.algebra import (DIM, E1, E2, E3, E12, E13, G0, G1, G2, G3, GAMMA,
                         J_UNIT, Multivector, ONE, PSEUDOSCALAR, cross,
                         exp, geometric_product, grade_involute,
                         grade_project, inner, inverse, pauli_conjugations,
                         pauli_embed, reverse, star, sym_product,
                         antisym_product, complex_conjugate, wedge)
from sta.errors import SingularError, ZeroDivisorError
from sta.matrices import IDEMPOTENTS
from sta.ring import R_J, R_ONE, R_PSEUDO, RingElement
from sta.rng import SplitMix64, random_bivector, random_multivector

from oracles import geometric_product_oracle, series_exp_oracle


def test_generator_squares_and_anticommutation():
    assert (G0 * G0).allclose(ONE)
    for g in (G1, G2, G3):
        assert (g * g).allclose(-ONE)
    assert (G1 * G2).allclose(Multivector.blade(0b0110))
    assert (G2 * G1).allclose(-Multivector.blade(0b0110))
    for mu in range(4):
        for nu in range(4):
            if mu != nu:
                assert (GAMMA[mu] * GAMMA[nu]
                        + GAMMA[nu] * GAMMA[mu]).is_zero(0)


def test_metric_table():
    signs = (1.0, -1.0, -1.0, -1.0)
    for mu in range(4):
        for nu in range(4):
            expect = signs[mu] if mu == nu else 0.0
            assert sym_product(GAMMA[mu], GAMMA[nu]).allclose(
                Multivector.scalar(expect), 0)


def test_pseudoscalar_structure():
    assert (E1 * E2 * E3).allclose(PSEUDOSCALAR, 0)
    assert ((E1 * E2 * E3) ** 2).allclose(-ONE, 0)
    for g in GAMMA:
        assert (PSEUDOSCALAR * g + g * PSEUDOSCALAR).is_zero(0)
    # commutes with the even subalgebra
    rng = SplitMix64(11)
    for _ in range(20):
        ev = random_multivector(rng).even()
        assert (PSEUDOSCALAR * ev - ev * PSEUDOSCALAR).is_zero(1e-12)


def test_product_against_list_oracle():
    rng = SplitMix64(2024)
    for _ in range(50):
        a = random_multivector(rng)
        b = random_multivector(rng)
        assert (a * b).max_diff(geometric_product_oracle(a, b)) < 1e-12
    assert geometric_product(G1, G2).allclose(G1 * G2, 0)


def test_associativity_distributivity_seeded():
    rng = SplitMix64(1)
    worst = 0.0
    for _ in range(1000):
        a = random_multivector(rng)
        b = random_multivector(rng)
        c = random_multivector(rng)
        worst = max(worst, ((a * b) * c).max_diff(a * (b * c)))
        worst = max(worst, (a * (b + c)).max_diff(a * b + a * c))
    assert worst < 1e-10


def test_grade_projection():
    g = ONE + Multivector.blade(0b0011)
    assert grade_project(g, 2).allclose(Multivector.blade(0b0011), 0)
    assert grade_project(G0, 1).allclose(G0, 0)
    assert grade_project(PSEUDOSCALAR, 4).allclose(PSEUDOSCALAR, 0)
    rng = SplitMix64(8)
    a = random_multivector(rng)
    # projections are idempotent and sum back to the element
    total = Multivector.zero()
    for k in range(5):
        pk = grade_project(a, k)
        assert grade_project(pk, k).allclose(pk, 0)
        total = total + pk
    assert total.allclose(a, 0)
    with pytest.raises(ValueError):
        grade_project(a, 5)


def test_conjugation_examples():
    assert reverse(Multivector.blade(0b0011)).allclose(
        -Multivector.blade(0b0011), 0)
    assert grade_involute(G0 + G0 * G1 * G2).allclose(
        -G0 - G0 * G1 * G2, 0)
    assert complex_conjugate(1j * (G1 * G2)).allclose(-1j * (G1 * G2), 0)
    assert star(G0).allclose(-G0, 0)


def test_conjugation_morphisms_and_involutions():
    rng = SplitMix64(3)
    for _ in range(100):
        a = random_multivector(rng)
        b = random_multivector(rng)
        assert (a * b).reverse().max_diff(b.reverse() * a.reverse()) < 1e-12
        assert (a * b).involute().max_diff(a.involute() * b.involute()) < 1e-12
        assert (a * b).conj().max_diff(a.conj() * b.conj()) < 1e-12
        for f in (reverse, grade_involute, complex_conjugate, star):
            assert f(f(a)).max_diff(a) == 0.0


def test_pauli_embedding():
    for k in (1, 2, 3):
        ek = pauli_embed(k)
        assert ek.allclose(GAMMA[k] * G0, 0)
        assert (ek * ek).allclose(ONE, 0)
    assert (pauli_embed(1) * pauli_embed(2) * pauli_embed(3)).allclose(
        PSEUDOSCALAR, 0)
    with pytest.raises(ValueError):
        pauli_embed(0)


def test_pauli_conjugations_componentwise():
    # g = alpha + x + I y, alpha in span{1, I}
    alpha = Multivector.scalar(0.7) + 0.3 * PSEUDOSCALAR
    alpha_dag = Multivector.scalar(0.7) - 0.3 * PSEUDOSCALAR
    x = 1.1 * E1 - 0.2 * E2
    y = 0.5 * E3 + 0.9 * E1
    g = alpha + x + PSEUDOSCALAR * y
    g_minus, g_dagger, g_star = pauli_conjugations(g)
    assert g_minus.max_diff(alpha_dag - x + PSEUDOSCALAR * y) < 1e-14
    assert g_dagger.max_diff(alpha_dag + x - PSEUDOSCALAR * y) < 1e-14
    assert g_star.max_diff(alpha - x - PSEUDOSCALAR * y) < 1e-14
    # dagger examples on basis elements
    assert pauli_conjugations(E1)[1].allclose(E1, 0)
    assert pauli_conjugations(PSEUDOSCALAR * E3)[1].allclose(
        -PSEUDOSCALAR * E3, 0)


def test_symmetric_antisymmetric_products():
    assert sym_product(E1, E1).allclose(ONE, 0)
    assert sym_product(E1, E2).is_zero(0)
    assert sym_product(E3, E1 + E3).allclose(ONE, 0)
    rng = SplitMix64(4)
    for _ in range(50):
        a = random_multivector(rng)
        b = random_multivector(rng)
        assert (sym_product(a, b) + antisym_product(a, b)).max_diff(a * b) < 1e-12
        assert sym_product(a, b).max_diff(sym_product(b, a)) < 1e-12
        assert antisym_product(a, b).max_diff(-antisym_product(b, a)) < 1e-12


def test_cross_product():
    assert cross(E1, E2).allclose(E3, 1e-15)
    assert cross(E3, E1).allclose(E2, 1e-15)
    assert cross(E2, E3).allclose(E1, 1e-15)


def test_wedge_and_inner():
    assert wedge(G0, G1).allclose(G0 * G1, 0)
    assert wedge(G0, G0).is_zero(0)
    assert inner(G0, G0).allclose(ONE, 0)
    # scalars are excluded from the inner product
    assert inner(Multivector.scalar(2.0), G1).is_zero(0)
    # bivector against bivector drops to a scalar
    b = G1 * G2
    assert inner(b, b).allclose(-ONE, 0)


def test_exp_examples():
    assert exp(Multivector.zero()).allclose(ONE, 0)
    rotor = exp((math.pi / 2) * E12)
    assert rotor.max_diff(E12) < 1e-14
    boost = exp(Multivector.blade(0b1001, -1.0))   # g30 squares to +1
    g30 = Multivector.blade(0b1001, -1.0)
    assert boost.max_diff(Multivector.scalar(math.cosh(1.0))
                          + math.sinh(1.0) * g30) < 1e-13


def test_exp_against_series_oracle():
    rng = SplitMix64(5)
    for _ in range(10):
        b = random_bivector(rng, scale=0.4)
        assert exp(b).max_diff(series_exp_oracle(b)) < 1e-13


def test_exp_inverse_pairs():
    rng = SplitMix64(6)
    for _ in range(50):
        b = random_bivector(rng, scale=2.0)
        if b.max_abs() > 5.0:
            continue
        assert (exp(b) * exp(-b)).max_diff(ONE) < 1e-10


def test_exp_overflow():
    with pytest.raises(OverflowError):
        exp(Multivector.scalar(1e6))


def test_inverse():
    assert inverse(G0).allclose(G0, 1e-12)
    assert inverse(Multivector.scalar(2.0)).allclose(
        Multivector.scalar(0.5), 1e-12)
    rng = SplitMix64(7)
    for _ in range(25):
        a = random_multivector(rng)
        try:
            ainv = inverse(a)
        except SingularError:
            continue
        assert (a * ainv).max_diff(ONE) < 1e-10
    with pytest.raises(SingularError):
        inverse(IDEMPOTENTS.u_pp)


def test_constructor_validation():
    with pytest.raises(ValueError):
        Multivector(np.zeros(8, dtype=complex))
    with pytest.raises(ValueError):
        Multivector([float("nan")] + [0.0] * 15)


# ---- the scalar ring --------------------------------------------------------


def test_ring_basis_squares():
    assert (R_J * R_J).allclose(R_ONE, 0)
    assert (R_PSEUDO * R_PSEUDO).allclose(-R_ONE, 0)
    i = RingElement(ci=1.0)
    assert (i * i).allclose(-R_ONE, 0)
    assert (i * R_PSEUDO).allclose(RingElement(ciI=1.0), 0)


def test_ring_commutativity_random():
    rng = SplitMix64(9)
    from sta.rng import random_ring_element
    for _ in range(100):
        a = random_ring_element(rng)
        b = random_ring_element(rng)
        assert (a * b).allclose(b * a, 1e-12)


def test_ring_matches_multivector_embedding():
    rng = SplitMix64(10)
    from sta.rng import random_ring_element
    for _ in range(100):
        a = random_ring_element(rng)
        b = random_ring_element(rng)
        assert (a * b).to_multivector().max_diff(
            a.to_multivector() * b.to_multivector()) < 1e-12
        assert (a + b).to_multivector().max_diff(
            a.to_multivector() + b.to_multivector()) < 1e-14
        assert a.conj_i().to_multivector().max_diff(
            a.to_multivector().conj()) < 1e-14
        try:
            ainv = a.inverse()
        except ZeroDivisorError:
            continue
        assert (a * ainv).allclose(R_ONE, 1e-10)
        s = a.sqrt()
        assert (s * s).allclose(a, 1e-10)
        assert a.exp().to_multivector().max_diff(exp(a.to_multivector())) < 1e-10


def test_ring_zero_divisors():
    one_plus_j = R_ONE + R_J
    with pytest.raises(ZeroDivisorError):
        one_plus_j.inverse()
    assert one_plus_j.is_zero_divisor()
    # (1+J)/2 is idempotent
    half = one_plus_j * 0.5
    assert (half * half).allclose(half, 0)
    assert RingElement.scalar(4.0).sqrt().allclose(RingElement.scalar(2.0), 0)


def test_ring_complex_pair_roundtrip():
    rng = SplitMix64(12)
    for _ in range(50):
        a = complex(rng.uniform(), rng.uniform())
        b = complex(rng.uniform(), rng.uniform())
        r = RingElement.from_complex_pair(a, b)
        # equals a + J b in the algebra
        jmv = R_J.to_multivector()
        expect = Multivector.scalar(a) + jmv * Multivector.scalar(b)
        assert r.to_multivector().max_diff(expect) < 1e-14
        ra, rb = r.complex_pair
        assert abs(ra - a) + abs(rb - b) < 1e-14


def test_ring_pauli_substitution():
    assert R_J.pauli_substitute().allclose(R_ONE, 0)
    assert RingElement(ci=1.0).pauli_substitute().allclose(R_PSEUDO, 0)
