"""Spinor operators, sphere states, boosts, canonical factorizations."""

import math

import numpy as np
import pytest

from sta.algebra import (E1, E2, E3, G0, Multivector, ONE, PSEUDOSCALAR,
                         exp, sym_product)
from sta.errors import NullStateError, ZeroDivisorError
from sta.matrices import (E3_PLUS, IDEMPOTENTS, det4, ring_determinant,
                          to_matrix)
from sta.ring import R_J, RingElement
from sta.rng import SplitMix64, random_spinor, random_regular_spinor
from sta.spinors import (DiracSpinor, boost_decompose, canonical_split,
                         complex_operators, family_ring_pair, family_spinor,
                         family_vector, family_velocity_ratio, g_spinor,
                         hermitian_split, odd_operator, operator_from_even,
                         perp_state, ring_pair, sphere_state,
                         spin_up_idempotent, spinor_from_ring_pair,
                         spinor_from_substitution_vars, spinor_operator,
                         substitution_vars)

from oracles import (even_operator_matrix_pattern,
                     odd_operator_matrix_pattern)

U = IDEMPOTENTS.u_pp


def test_g_spinor_examples():
    assert g_spinor(DiracSpinor(1, 0, 0, 0)).max_diff(U) == 0.0
    assert g_spinor(DiracSpinor(0, 1, 0, 0)).max_diff(
        (E1 * E3) * U) == 0.0
    # the imaginary unit acts as g21 inside the ideal
    g21 = Multivector.blade(0b0110, -1.0)
    assert g_spinor(DiracSpinor(1j, 0, 0, 0)).max_diff(g21 * U) < 1e-15
    assert (U * g21).max_diff(1j * U) < 1e-15
    assert (g21 * U).max_diff(1j * U) < 1e-15


def test_g_spinor_stays_in_ideal():
    rng = SplitMix64(41)
    for _ in range(50):
        s = g_spinor(random_spinor(rng))
        assert (s * U).max_diff(s) < 1e-13


def test_operator_examples():
    assert spinor_operator(DiracSpinor(1, 0, 0, 0)).psi.max_diff(ONE) == 0.0
    assert spinor_operator(DiracSpinor(0, 0, 1, 0)).psi.max_diff(E3) == 0.0


def test_operator_matrix_pattern():
    rng = SplitMix64(42)
    for _ in range(100):
        d = random_spinor(rng)
        m = to_matrix(spinor_operator(d).psi)
        assert np.abs(m - even_operator_matrix_pattern(d)).max() < 1e-13
        assert np.abs(m[:, 0] - np.array(d.components)).max() < 1e-13


def test_odd_and_complex_operators():
    assert odd_operator(DiracSpinor(1, 0, 0, 0)).max_diff(G0) == 0.0
    rng = SplitMix64(43)
    for _ in range(100):
        d = random_spinor(rng)
        phi = odd_operator(d)
        assert phi.even().is_zero(1e-13)
        assert np.abs(to_matrix(phi)
                      - odd_operator_matrix_pattern(d)).max() < 1e-13
        det_even = det4(to_matrix(spinor_operator(d).psi))
        zp, zm = complex_operators(d)
        for other in (phi, zp, zm):
            assert abs(det4(to_matrix(other)) - det_even) < 1e-10


def test_det4_nonnegative():
    rng = SplitMix64(44)
    for _ in range(300):
        d = random_spinor(rng)
        det = det4(to_matrix(spinor_operator(d).psi))
        assert det.real >= -1e-12
        assert abs(det.imag) < 1e-10


def test_ring_pair_examples():
    r0, r1 = ring_pair(DiracSpinor(1, 0, 0, 0))
    assert r0.allclose(RingElement.scalar(1.0), 0) and r1.allclose(
        RingElement(), 0)
    r0, r1 = ring_pair(DiracSpinor(0, 0, 1, 0))
    assert r0.allclose(R_J, 0) and r1.allclose(RingElement(), 0)
    r0, r1 = ring_pair(DiracSpinor(0, 1, 0, 0))
    assert r0.allclose(RingElement(), 0) and r1.allclose(R_J, 0)
    rng = SplitMix64(45)
    for _ in range(50):
        d = random_spinor(rng)
        back = spinor_from_ring_pair(*ring_pair(d))
        assert max(abs(a - b) for a, b
                   in zip(back.components, d.components)) < 1e-14


def test_ideal_conjugate_shifts():
    rng = SplitMix64(46)
    for _ in range(50):
        d = random_spinor(rng)
        s = g_spinor(d)
        r0, r1 = ring_pair(d)
        omega = r0.to_multivector() + r1.to_multivector() * E1
        omega_bar = (r0.conj_i().to_multivector()
                     + r1.conj_i().to_multivector() * E1)
        assert s.max_diff(omega * U) < 1e-13
        assert s.conj().max_diff(omega_bar * IDEMPOTENTS.u_pm) < 1e-13
        assert s.involute().max_diff(omega * IDEMPOTENTS.u_mp) < 1e-13
        assert s.star().max_diff(omega_bar * IDEMPOTENTS.u_mm) < 1e-13


def test_substitution_vars():
    x, y = substitution_vars(DiracSpinor(1, 0, 0, 0))
    assert np.allclose(x, [1, 0, 0, 0]) and np.allclose(y, 0)
    x, y = substitution_vars(DiracSpinor(1j, 0, 0, 0))
    assert np.allclose(x, 0) and np.allclose(y, [0, 0, 0, 1])
    rng = SplitMix64(47)
    for _ in range(50):
        d = random_spinor(rng)
        back = spinor_from_substitution_vars(*substitution_vars(d))
        assert max(abs(a - b) for a, b
                   in zip(back.components, d.components)) < 1e-14


def test_z_variable_pair_form():
    # r0 = z1 + J z3 and r1 = z4 + z2 J with the span{1, I} scalars
    # z1 = x0 + y0 I, z2 = -y2 + x2 I, z3 = x3 + y3 I, z4 = x1 + y1 I
    rng = SplitMix64(48)
    for _ in range(50):
        d = random_spinor(rng)
        x, y = substitution_vars(d)
        z1 = RingElement(c1=x[0], cI=y[0])
        z2 = RingElement(c1=-y[2], cI=x[2])
        z3 = RingElement(c1=x[3], cI=y[3])
        z4 = RingElement(c1=x[1], cI=y[1])
        r0, r1 = ring_pair(d)
        assert r0.allclose(z1 + R_J * z3, 1e-13)
        assert r1.allclose(z4 + z2 * R_J, 1e-13)


def test_hermitian_split():
    op = spinor_operator(spinor_from_substitution_vars(
        [0.3, 1.0, -0.7, 0.2], [0.9, -0.4, 0.5, 1.1]))
    x_part, iy_part = hermitian_split(op)
    assert (x_part + iy_part).max_diff(op.psi) < 1e-14
    dag = lambda g: G0 * g.reverse() * G0
    assert dag(x_part).max_diff(x_part) < 1e-13
    assert dag(iy_part).max_diff(-iy_part) < 1e-13
    # determinants of the two parts in the ring representation
    from sta.matrices import ring_matrix
    x = np.array([0.3, 1.0, -0.7, 0.2])
    y = np.array([0.9, -0.4, 0.5, 1.1])
    det_h = ring_matrix(x_part).det()
    assert det_h.allclose(RingElement.scalar(
        x[0] ** 2 - x[1] ** 2 - x[2] ** 2 - x[3] ** 2), 1e-12)
    det_a = ring_matrix(iy_part).det()
    assert det_a.allclose(RingElement.scalar(
        -y[0] ** 2 + y[1] ** 2 + y[2] ** 2 + y[3] ** 2), 1e-12)


def test_hermitian_split_examples():
    # pure time component: determinant x0^2; pure e1 anti part: +y1^2
    op = spinor_operator(spinor_from_substitution_vars([2, 0, 0, 0],
                                                       [0, 0, 0, 0]))
    from sta.matrices import ring_matrix
    xp, _ = hermitian_split(op)
    assert ring_matrix(xp).det().allclose(RingElement.scalar(4.0), 1e-13)
    op = spinor_operator(spinor_from_substitution_vars([0, 0, 0, 0],
                                                       [0, 3, 0, 0]))
    _, iyp = hermitian_split(op)
    assert ring_matrix(iyp).det().allclose(RingElement.scalar(9.0), 1e-13)


# ---- sphere states ----------------------------------------------------------


def test_sphere_north_pole():
    st = sphere_state(DiracSpinor(1, 0, 0, 0))
    assert st.m.max_diff(E3) < 1e-15
    assert st.a_hat.max_diff(E3) < 1e-15
    assert st.m_squared.allclose(RingElement.scalar(1.0), 1e-15)
    assert st.phi_boost == 0.0


def test_sphere_tilted_state():
    # r0 = 1, r1 = J comes from components (1, 1, 0, 0)
    st = sphere_state(DiracSpinor(1, 1, 0, 0))
    assert st.stereo.allclose(R_J, 1e-15)
    assert st.m.max_diff(E1 + E3) < 1e-14
    assert st.m_squared.allclose(RingElement.scalar(2.0), 1e-14)
    assert st.a_hat.max_diff(E1) < 1e-14


def test_sphere_invariants_random():
    rng = SplitMix64(49)
    checked = 0
    while checked < 200:
        d = random_regular_spinor(rng)
        try:
            st = sphere_state(d)
        except (NullStateError, ZeroDivisorError):
            continue
        checked += 1
        assert sym_product(E3, st.m).max_diff(ONE) < 1e-9
        lam_sq = st.stereo * st.stereo.conj_i()
        assert st.m_squared.allclose(RingElement.scalar(1.0) - lam_sq, 1e-9)
        assert (st.m_hat * st.m_hat).max_diff(ONE) < 1e-9
        assert sym_product(st.a_hat, st.a_hat).max_diff(ONE) < 1e-9
        # projective relation: (1 - L conj L)/2 (a + e3) = M
        half = (RingElement.scalar(1.0) - lam_sq) * 0.5
        assert (half.to_multivector() * (st.a_hat + E3)).max_diff(st.m) < 1e-9
        # a = 2 M / M^2 - e3
        assert st.a_hat.max_diff(
            2.0 * st.m_squared.inverse() * st.m - E3) < 1e-9


def test_sphere_errors():
    # r0 = p1 + J p3 vanishes identically
    with pytest.raises(ZeroDivisorError):
        sphere_state(DiracSpinor(0, 1, 0, 1))
    # r0 = 1 - J is a zero divisor (one projection vanishes)
    with pytest.raises(ZeroDivisorError):
        sphere_state(DiracSpinor(1, 0, -1, 0))
    # stereo coordinate of unit ring norm: M^2 = 0
    with pytest.raises(NullStateError):
        sphere_state(DiracSpinor(1, 0, 0, 1))


def test_null_boost_flag():
    # p1 = 1, p3 = 0, p2 = p4 = x + i y : stereo = (1 + J)(x + i y)
    x, y = 0.4, -0.8
    d = DiracSpinor(1, complex(x, y), 0, complex(x, y))
    st = sphere_state(d)
    assert st.null_boost
    expected_m = (x * E1 + y * E2 + E3
                  + PSEUDOSCALAR * (y * E1 - x * E2))
    assert st.m.max_diff(expected_m) < 1e-13
    assert st.m_squared.allclose(RingElement.scalar(1.0), 1e-13)
    xv = x * E1 + y * E2
    expected_axis = 2.0 * (xv * (ONE + E3)) + E3
    assert st.a_hat.max_diff(expected_axis) < 1e-13
    # ordinary states are not flagged
    assert not sphere_state(DiracSpinor(1, 1, 0, 0)).null_boost


def test_spin_up_idempotent():
    rng = SplitMix64(50)
    checked = 0
    while checked < 100:
        d = random_regular_spinor(rng)
        try:
            t = spin_up_idempotent(d)
        except ZeroDivisorError:
            continue
        checked += 1
        assert (t * t).max_diff(t) < 1e-10
        # canonical equivalents J M E3+ and M e3 E3+ and M^2 A+ E3+
        st = sphere_state(d)
        jm = R_J.to_multivector() * st.m * E3_PLUS
        me3 = st.m * E3 * E3_PLUS
        a_plus = st.m_hat * E3_PLUS * st.m_hat
        msq_a = st.m_squared.to_multivector() * a_plus * E3_PLUS
        assert t.max_diff(jm) < 1e-10
        assert t.max_diff(me3) < 1e-10
        assert t.max_diff(msq_a) < 1e-10


# ---- boosts -----------------------------------------------------------------


def test_boost_real_state_has_no_boost():
    st = sphere_state(DiracSpinor(1, 1, 0, 0))   # M = e1 + e3, real
    dec = boost_decompose(st)
    assert dec.phi == 0.0
    assert dec.m1_hat.max_diff(st.m_hat) < 1e-14
    assert dec.velocity_ratio == 0.0


def test_boost_family_example():
    st = sphere_state(family_spinor((1, 0), 1.0))
    dec = boost_decompose(st)
    root2 = math.sqrt(2.0)
    assert dec.m1.max_diff((math.cosh(1.0) * E1 + E3) / root2) < 1e-13
    assert dec.m2.max_diff((math.sinh(1.0) / root2) * E2) < 1e-13
    assert abs(math.cosh(dec.phi)
               - math.sqrt(math.cosh(1.0) ** 2 + 1.0) / root2) < 1e-13
    # direction (-xhat + e3 |x| cosh) / sqrt(x^2 cosh^2 + 1)
    denom = math.sqrt(math.cosh(1.0) ** 2 + 1.0)
    assert dec.direction.max_diff(
        (-E1 + math.cosh(1.0) * E3) / denom) < 1e-12


def test_boost_reconstruction_random():
    rng = SplitMix64(51)
    for _ in range(100):
        x = (rng.uniform(-3, 3), rng.uniform(-3, 3))
        phi_x = rng.uniform(-1.5, 1.5)
        st = sphere_state(family_spinor(x, phi_x))
        dec = boost_decompose(st)
        # m_hat = m1hat cosh + I m2hat sinh = exp(phi dir) m1hat
        direct = (math.cosh(dec.phi) * dec.m1_hat
                  + math.sinh(dec.phi) * (PSEUDOSCALAR * dec.m2_hat))
        assert st.m_hat.max_diff(direct) < 1e-9
        rotor = exp(dec.phi * dec.direction)
        assert st.m_hat.max_diff(rotor * dec.m1_hat) < 1e-9
        # axis via rotation then boost conjugation
        rotated = dec.m1_hat * E3 * dec.m1_hat
        boosted = rotor * rotated * exp(-dec.phi * dec.direction)
        assert st.a_hat.max_diff(boosted) < 1e-9
        if dec.phi > 1e-8:
            # pseudoscalar factorization of the orthogonal triple
            assert (dec.m1_hat * dec.m2_hat * dec.direction).max_diff(
                PSEUDOSCALAR) < 1e-9


def test_velocity_ratio_formula():
    # frozen from the closed formula sqrt(sinh^2(1) / (cosh^2(1) + 1))
    assert abs(family_velocity_ratio((1, 0), 1.0)
               - 0.6391213925254458) < 1e-12
    rng = SplitMix64(52)
    for _ in range(100):
        x = (rng.uniform(-3, 3), rng.uniform(-3, 3))
        phi_x = rng.uniform(-1.5, 1.5)
        dec = boost_decompose(sphere_state(family_spinor(x, phi_x)))
        assert abs(dec.velocity_ratio
                   - family_velocity_ratio(x, phi_x)) < 1e-9
        assert abs(dec.velocity_ratio - math.tanh(dec.phi)) < 1e-13


# ---- canonical factorizations ----------------------------------------------


def test_canonical_trivial():
    cf = canonical_split(DiracSpinor(1, 0, 0, 0))
    assert cf.omega1.magnitude() < 1e-14
    assert cf.omega2.magnitude() < 1e-14
    assert cf.m_hat.max_diff(E3) < 1e-14
    assert cf.s_e.max_diff(E3_PLUS) < 1e-14
    assert cf.primary.max_diff(E3_PLUS) < 1e-14


def test_canonical_det_two():
    cf = canonical_split(DiracSpinor(math.sqrt(2.0), 0, 0, 0))
    assert cf.omega1.exp().allclose(RingElement.scalar(math.sqrt(2.0)),
                                    1e-13)


def test_canonical_forms_reconstruct():
    rng = SplitMix64(53)
    checked = 0
    while checked < 100:
        d = random_regular_spinor(rng)
        try:
            cf = canonical_split(d)
        except (ZeroDivisorError, NullStateError):
            continue
        checked += 1
        assert cf.primary.max_diff(cf.s_e) < 1e-9
        assert cf.rotor_e3.max_diff(cf.s_e) < 1e-9
        assert cf.rotor_axis.max_diff(cf.s_e) < 1e-9
        # defining properties of the ring angles
        rdet = ring_determinant(spinor_operator(d))
        assert (cf.omega1.exp() * cf.omega1.exp()).allclose(rdet, 1e-9)
        assert (cf.m_hat * cf.m_hat).max_diff(ONE) < 1e-9
        # angle form of m_hat e3
        if cf.b_e is not None:
            s = cf.z_e
            from sta.ring import RingElement as RE
            import cmath
            p, m = s.split
            cos_z = RE.from_split(cmath.cos(p), cmath.cos(m))
            sin_z = RE.from_split(cmath.sin(p), cmath.sin(m))
            recon = (cos_z.to_multivector()
                     + PSEUDOSCALAR * cf.b_e * sin_z.to_multivector())
            assert (cf.m_hat * E3).max_diff(recon) < 1e-9


def test_canonical_singular_rejected():
    with pytest.raises(ZeroDivisorError):
        canonical_split(DiracSpinor(1, 0, 1, 0))


# ---- family and perpendicular states ---------------------------------------


def test_family_vector_examples():
    assert family_vector((0, 0), 0.7).max_diff(E3) == 0.0
    assert family_vector((1, 1), 0.0).max_diff(E1 + E2 + E3) < 1e-15
    st = sphere_state(family_spinor((1, 1), 0.0))
    assert st.m_squared.allclose(RingElement.scalar(3.0), 1e-13)
    expect = (math.cosh(1.0) * E1 + E3
              + PSEUDOSCALAR * (math.sinh(1.0) * E2))
    assert family_vector((1, 0), 1.0).max_diff(expect) < 1e-15


def test_family_realizations_agree():
    rng = SplitMix64(54)
    for _ in range(50):
        x = (rng.uniform(-3, 3), rng.uniform(-3, 3))
        phi_x = rng.uniform(-2, 2)
        r0a, r1a = family_ring_pair(x, phi_x, realization=0)
        r0b, r1b = family_ring_pair(x, phi_x, realization=1)
        la = r0a.inverse() * r1a
        lb = r0b.inverse() * r1b
        assert la.allclose(lb, 1e-10)
        st = sphere_state(spinor_from_ring_pair(r0a, r1a))
        assert st.m.max_diff(family_vector(x, phi_x)) < 1e-10


def test_perp_state():
    st = sphere_state(family_spinor((1, 0), 0.0))
    perp = perp_state(st, (1, 0), 0.0)
    assert perp.m.max_diff(-E1 + E3) < 1e-13
    assert sym_product(perp.a_hat, st.a_hat).max_diff(-ONE) < 1e-12
    rng = SplitMix64(55)
    for _ in range(50):
        x = (rng.uniform(0.2, 3), rng.uniform(-3, 3))
        phi_x = rng.uniform(-1.5, 1.5)
        st = sphere_state(family_spinor(x, phi_x))
        perp = perp_state(st, x, phi_x)
        assert sym_product(perp.a_hat, st.a_hat).max_diff(-ONE) < 1e-9
    with pytest.raises(ValueError):
        perp_state(sphere_state(family_spinor((0, 0), 0.0)), (0, 0), 0.0)


def test_operator_from_even_roundtrip():
    rng = SplitMix64(56)
    for _ in range(50):
        op = spinor_operator(random_spinor(rng))
        back = operator_from_even(op.psi)
        assert back.psi.max_diff(op.psi) < 1e-12
    with pytest.raises(ValueError):
        operator_from_even(G0)
