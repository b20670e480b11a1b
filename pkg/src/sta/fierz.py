"""Physical observables of a spinor operator and their quadratic relations.

For a real even operator g the bilinears

    J = g g0 g*        (current, a spacetime vector)
    S = g g12 g*       (spin bivector)
    K = g g3 g*        (axial vector)
    R = g g* = R1 + I R2   (scalar plus pseudoscalar invariant)
    N = g g^dagger     (rest-frame density paravector)

satisfy a closed set of quadratic identities: J^2 = R1^2 + R2^2 >= 0,
S^2 = -R^2, K^2 = -J^2 <= 0, K.J = 0, K J = I S R^dagger = K ^ J,
J S = -I R^dagger K and J S K = I |R|^2 R^dagger (the last two signs
follow from I anticommuting with the odd factor J; the trivial operator
g = 1, where J S = g012 and I K = -g012, pins them).  An operator is regular
(describes an electron-type spinor) exactly when its ring determinant R
is nonzero; otherwise the observables degenerate and which of them vanish
is reported alongside the classification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (G0, Multivector, PSEUDOSCALAR, inner, sym_product,
                      wedge)
from .ring import RingElement
from .spinors import SpinorOperator, operator_from_even

_GAMMA12 = Multivector.blade(0b0110)
_GAMMA3 = Multivector.blade(0b1000)

REGULAR = "REGULAR"
SINGULAR = "SINGULAR"


@dataclass(frozen=True)
class Observables:
    """Bilinear covariants of one spinor operator."""

    current: Multivector       # J
    spin: Multivector          # S
    axial: Multivector         # K
    invariant: RingElement     # R = R1 + I R2
    density: Multivector       # N = g g^dagger
    theta: float               # J o g0
    axis_part: Multivector     # J - theta g0

    @property
    def r1(self) -> float:
        return self.invariant.c1

    @property
    def r2(self) -> float:
        return self.invariant.cI


def _coerce_operator(g) -> SpinorOperator:
    if isinstance(g, SpinorOperator):
        return g
    if isinstance(g, Multivector):
        return operator_from_even(g)
    raise TypeError("expected SpinorOperator or even Multivector")


def observables(g) -> Observables:
    """Compute all bilinears; rejects non-even input."""
    op = _coerce_operator(g)
    gm = op.psi
    g_star = gm.reverse()
    g_dagger = G0 * g_star * G0
    current = gm * G0 * g_star
    spin = gm * _GAMMA12 * g_star
    axial = gm * _GAMMA3 * g_star
    invariant = RingElement.from_multivector(gm * g_star, strict=True)
    density = gm * g_dagger
    theta = sym_product(current, G0).scalar_part.real
    return Observables(current=current, spin=spin, axial=axial,
                       invariant=invariant, density=density, theta=theta,
                       axis_part=current - theta * G0)


@dataclass(frozen=True)
class FierzReport:
    """Residuals of the quadratic identities, largest first decides pass."""

    residuals: dict
    tol: float

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol

    def lines(self):
        width = max(len(k) for k in self.residuals)
        out = []
        for name, res in self.residuals.items():
            verdict = "ok" if res <= self.tol else "FAIL"
            out.append(f"{name:<{width}}  {res:.3e}  {verdict}")
        return out


def fierz_check(obs: Observables, tol: float = 1e-9) -> FierzReport:
    """Verify every quadratic identity, reporting per-identity residuals."""
    j, s, k = obs.current, obs.spin, obs.axial
    r = obs.invariant
    r_dag = r.conj_I()
    r_dag_mv = r_dag.to_multivector()
    r1sq_r2sq = obs.r1 ** 2 + obs.r2 ** 2

    j_sq = (j * j).scalar_part
    k_sq = (k * k).scalar_part
    residuals = {
        "current_square": abs(j_sq - r1sq_r2sq),
        "spin_square": ((s * s) + (r * r).to_multivector()).max_abs(),
        "axial_square": abs(k_sq + j_sq),
        "axial_dot_current": inner(k, j).max_abs(),
        "kj_equals_wedge": (k * j - wedge(k, j)).max_abs(),
        "kj_spin_form": (k * j - PSEUDOSCALAR * s * r_dag_mv).max_abs(),
        "js_axial_form": (j * s + PSEUDOSCALAR * r_dag_mv * k).max_abs(),
        "jsk_invariant": (j * s * k
                          - PSEUDOSCALAR * (r1sq_r2sq * r_dag_mv)).max_abs(),
    }
    residuals = {name: float(abs(v)) for name, v in residuals.items()}
    return FierzReport(residuals=residuals, tol=tol)


@dataclass(frozen=True)
class RegularityReport:
    classification: str
    det: RingElement
    vanishing: tuple

    @property
    def is_regular(self) -> bool:
        return self.classification == REGULAR


def regularity(g, tol: float = 1e-9) -> RegularityReport:
    """Regular/singular split by the ring determinant, with a summary of
    which observables vanish numerically."""
    op = _coerce_operator(g)
    det = op.ring_det()
    obs = observables(op)
    vanishing = []
    if abs(obs.r1) < tol:
        vanishing.append("R1")
    if abs(obs.r2) < tol:
        vanishing.append("R2")
    for name, mv in (("J", obs.current), ("S", obs.spin), ("K", obs.axial)):
        if mv.max_abs() < tol:
            vanishing.append(name)
    cls = REGULAR if det.magnitude() >= tol else SINGULAR
    return RegularityReport(classification=cls, det=det,
                            vanishing=tuple(vanishing))


def grade_signature(mv: Multivector, tol: float = 1e-9):
    """Sorted tuple of grades carrying weight above tol."""
    out = []
    for k in range(5):
        if mv.grade(k).max_abs() > tol:
            out.append(k)
    return tuple(out)
