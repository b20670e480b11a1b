"""Seeded identity battery covering every module, used by the CLI runner.

Each family draws its own deterministic sample stream and returns the
largest residual it saw, so a run is summarized by one number per family
and is byte-reproducible for a fixed seed.
"""

from __future__ import annotations

import numpy as np

from . import matrices
from .algebra import (E1, E3, GAMMA, Multivector, ONE, PSEUDOSCALAR,
                      G0, inner, pauli_conjugations, sym_product, wedge)
from .fierz import fierz_check, observables
from .matrices import (IDEMPOTENTS, det4, from_matrix, ring_determinant,
                       to_matrix)
from .measurement import (Ket, PauliKet, braket, braket_components,
                          dirac_from_e, family_probability, family_state,
                          spin_up_along, transition_probability)
from .ring import RingElement
from .rng import (SplitMix64, random_multivector, random_regular_spinor,
                  random_spinor)
from .spinors import (ring_pair, spinor_operator, substitution_vars)

FAMILIES = (
    "product_axioms",
    "metric_and_pseudoscalar",
    "conjugations",
    "idempotent_structure",
    "matrix_isomorphism",
    "determinant_laws",
    "operator_reconstruction",
    "inner_products",
    "triple_idempotent",
    "probability_paths",
    "fierz_identities",
)


def _stream(seed: int, family: str) -> SplitMix64:
    h = 1469598103934665603
    for ch in family.encode():
        h = ((h ^ ch) * 1099511628211) & ((1 << 64) - 1)
    return SplitMix64(seed ^ h)


def product_axioms(seed: int, n: int) -> float:
    rng = _stream(seed, "product_axioms")
    worst = 0.0
    for _ in range(n):
        a = random_multivector(rng)
        b = random_multivector(rng)
        c = random_multivector(rng)
        worst = max(worst, ((a * b) * c).max_diff(a * (b * c)))
        worst = max(worst, (a * (b + c)).max_diff(a * b + a * c))
        worst = max(worst, ((a + b) * c).max_diff(a * c + b * c))
    return worst


def metric_and_pseudoscalar(seed: int, n: int) -> float:
    del seed, n
    worst = 0.0
    signs = (1.0, -1.0, -1.0, -1.0)
    for mu in range(4):
        for nu in range(4):
            expect = signs[mu] if mu == nu else 0.0
            worst = max(worst, sym_product(GAMMA[mu], GAMMA[nu])
                        .max_diff(Multivector.scalar(expect)))
        worst = max(worst, (PSEUDOSCALAR * GAMMA[mu]
                            + GAMMA[mu] * PSEUDOSCALAR).max_abs())
    return worst


def conjugations(seed: int, n: int) -> float:
    from .spinors import space_paravector

    rng = _stream(seed, "conjugations")
    worst = 0.0
    for _ in range(n):
        a = random_multivector(rng)
        b = random_multivector(rng)
        worst = max(worst, (a * b).reverse().max_diff(b.reverse() * a.reverse()))
        worst = max(worst, (a * b).involute().max_diff(a.involute() * b.involute()))
        worst = max(worst, a.reverse().reverse().max_diff(a))
        worst = max(worst, a.star().star().max_diff(a))
        # componentwise rest-frame conjugations on a real even element
        # g = alpha + x + I y with alpha in span{1, I}
        op = spinor_operator(random_spinor(rng))
        x, y = substitution_vars(op.spinor)
        alpha = Multivector.scalar(x[0]) + y[0] * PSEUDOSCALAR
        bx = space_paravector(0.0, (x[1], x[2], x[3]))
        by = space_paravector(0.0, (y[1], y[2], y[3]))
        g = alpha + bx + PSEUDOSCALAR * by
        worst = max(worst, g.max_diff(op.psi))
        g_minus, g_dagger, g_star = pauli_conjugations(g)
        alpha_dag = Multivector.scalar(x[0]) - y[0] * PSEUDOSCALAR
        worst = max(worst, g_minus.max_diff(alpha_dag - bx + PSEUDOSCALAR * by))
        worst = max(worst, g_dagger.max_diff(alpha_dag + bx - PSEUDOSCALAR * by))
        worst = max(worst, g_star.max_diff(alpha - bx - PSEUDOSCALAR * by))
    return worst


def idempotent_structure(seed: int, n: int) -> float:
    del seed, n
    worst = 0.0
    us = IDEMPOTENTS.all_four()
    total = Multivector.zero()
    for i, u in enumerate(us):
        worst = max(worst, (u * u).max_diff(u))
        total = total + u
        for j, v in enumerate(us):
            if i != j:
                worst = max(worst, (u * v).max_abs())
    worst = max(worst, total.max_diff(ONE))
    u = IDEMPOTENTS.u_pp
    worst = max(worst, u.max_diff(IDEMPOTENTS.gamma0_plus * IDEMPOTENTS.e3_plus))
    worst = max(worst, (IDEMPOTENTS.gamma0_plus * IDEMPOTENTS.e3_plus
                        - IDEMPOTENTS.e3_plus * IDEMPOTENTS.gamma0_plus).max_abs())
    from .algebra import E13
    worst = max(worst, (E13 * u).max_diff(IDEMPOTENTS.u_pm * E13))
    worst = max(worst, (E3 * u).max_diff(IDEMPOTENTS.u_mp * E3))
    worst = max(worst, (E1 * u).max_diff(IDEMPOTENTS.u_mm * E1))
    return worst


def matrix_isomorphism(seed: int, n: int) -> float:
    rng = _stream(seed, "matrix_isomorphism")
    worst = 0.0
    for _ in range(n):
        a = random_multivector(rng)
        b = random_multivector(rng)
        ma, mb = to_matrix(a), to_matrix(b)
        worst = max(worst, float(np.abs(to_matrix(a * b) - ma @ mb).max()))
        worst = max(worst, from_matrix(ma).max_diff(a))
        m = np.array([[rng.complex_uniform() for _ in range(4)]
                      for _ in range(4)])
        worst = max(worst, float(np.abs(to_matrix(from_matrix(m)) - m).max()))
    return worst


def determinant_laws(seed: int, n: int) -> float:
    rng = _stream(seed, "determinant_laws")
    worst = 0.0
    for _ in range(n):
        d = random_spinor(rng)
        op = spinor_operator(d)
        p1, p2, p3, p4 = d.components
        r = (abs(p1) ** 2 + abs(p2) ** 2 - abs(p3) ** 2 - abs(p4) ** 2)
        a = (p1.conjugate() * p3 + p2.conjugate() * p4).imag
        expected = r * r + 4.0 * a * a
        det_psi = det4(to_matrix(op.psi))

        x, y = substitution_vars(d)
        mink = np.diag([1.0, -1.0, -1.0, -1.0])
        xx = float(x @ mink @ x)
        yy = float(y @ mink @ y)
        xy = float(x @ mink @ y)
        expected_xy = (xx - yy) ** 2 + 4.0 * xy * xy

        rd = ring_determinant(op)
        det_mag = rd.c1 ** 2 + rd.cI ** 2

        scale = max(1.0, abs(expected))
        worst = max(worst, abs(det_psi - expected) / scale)
        worst = max(worst, abs(expected_xy - expected) / scale)
        worst = max(worst, abs(det_mag - expected) / scale)

        from .spinors import complex_operators, odd_operator
        det_odd = det4(to_matrix(odd_operator(d)))
        zp, zm = complex_operators(d)
        worst = max(worst, abs(det_odd - det_psi) / scale)
        worst = max(worst, abs(det4(to_matrix(zp)) - det_psi) / scale)
        worst = max(worst, abs(det4(to_matrix(zm)) - det_psi) / scale)
    return worst


def operator_reconstruction(seed: int, n: int) -> float:
    rng = _stream(seed, "operator_reconstruction")
    worst = 0.0
    from .matrices import even_from_ring_pair
    for _ in range(n):
        d = random_spinor(rng)
        op = spinor_operator(d)
        worst = max(worst, even_from_ring_pair(op.ring0, op.ring1)
                    .max_diff(op.psi))
        from .spinors import g_spinor
        s = g_spinor(d)
        worst = max(worst, (op.psi * IDEMPOTENTS.u_pp).max_diff(s))
    return worst


def inner_products(seed: int, n: int) -> float:
    rng = _stream(seed, "inner_products")
    worst = 0.0
    for _ in range(n):
        da = random_spinor(rng)
        db = random_spinor(rng)
        ka, kb = Ket.from_spinor(da), Ket.from_spinor(db)
        v_mv = braket(ka, kb)
        v_comp = braket_components(da, db)
        v_e = dirac_from_e(PauliKet.from_spinor(da), PauliKet.from_spinor(db))
        worst = max(worst, abs(v_mv - v_comp))
        worst = max(worst, abs(v_e - v_comp))
    return worst


def triple_idempotent(seed: int, n: int) -> float:
    rng = _stream(seed, "triple_idempotent")
    worst = 0.0
    count = 0
    while count < n:
        da = random_regular_spinor(rng)
        db = random_regular_spinor(rng)
        from .errors import NullStateError
        from .spinors import sphere_state
        try:
            sa = sphere_state(da)
            sb = sphere_state(db)
        except NullStateError:
            continue
        count += 1
        up_a = spin_up_along(sa.a_hat)
        up_b = spin_up_along(sb.a_hat)
        lhs = up_a * up_b * up_a
        overlap = RingElement.from_multivector(
            sym_product(sa.a_hat, sb.a_hat), strict=False)
        rhs = 0.5 * ((RingElement(c1=1.0) + overlap).to_multivector() * up_a)
        worst = max(worst, lhs.max_diff(rhs))
    return worst


def probability_paths(seed: int, n: int) -> float:
    rng = _stream(seed, "probability_paths")
    worst = 0.0
    for _ in range(n):
        x = (rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
        y = (rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
        phi = rng.uniform(-1.5, 1.5)
        sa = family_state(x, phi)
        sb = family_state(y, phi)
        value = transition_probability(sa, sb)
        closed, _ = family_probability(x, phi, y, phi)
        worst = max(worst, value.max_diff(closed))
    return worst


def fierz_identities(seed: int, n: int) -> float:
    rng = _stream(seed, "fierz_identities")
    worst = 0.0
    for _ in range(n):
        op = spinor_operator(random_regular_spinor(rng))
        report = fierz_check(observables(op))
        worst = max(worst, report.max_residual)
    return worst


_RUNNERS = {
    "product_axioms": product_axioms,
    "metric_and_pseudoscalar": metric_and_pseudoscalar,
    "conjugations": conjugations,
    "idempotent_structure": idempotent_structure,
    "matrix_isomorphism": matrix_isomorphism,
    "determinant_laws": determinant_laws,
    "operator_reconstruction": operator_reconstruction,
    "inner_products": inner_products,
    "triple_idempotent": triple_idempotent,
    "probability_paths": probability_paths,
    "fierz_identities": fierz_identities,
}


def run_suite(seed: int, n: int):
    """Run every family; returns a list of (name, max_residual)."""
    return [(name, _RUNNERS[name](seed, n)) for name in FAMILIES]
