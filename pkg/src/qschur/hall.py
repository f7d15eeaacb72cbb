"""The cohomological Hall algebra and the cohomological Hall module on
invariant polynomials.

H_a is represented by the symmetric polynomials of the ordinary layout of a,
the module piece for b by the theta layout of b.  Every product has two
independent routes (Demazure operators and shuffle symmetrization) that the
test suite compares.
"""
from __future__ import annotations

from .operators import (
    class_E_factors, demazure_sum, find_demazure_preimage_of_one, invariant_basis, is_invariant,
    hilbert_series as _hilbert_series, layout_for, ordinary_layout, relative_demazure, relative_r,
    theta_E_factors, theta_layout, theta_r,
)
from .poly import InvariantViolation, Polynomial, PolyRing
from .quiver import DimVector, InvolutionData, IsotropicVectorComposition, Quiver, VectorComposition
from .schur import GradedElement, Setting, apply_merge, apply_split, theta_merge_polynomial

EMPTY_RING = PolyRing(())


def ring_of(q_or_inv, c: DimVector) -> PolyRing:
    """Ring carrying H_c (a Quiver) or the module piece at c (InvolutionData)."""
    if c.is_zero():
        return EMPTY_RING
    return layout_for(q_or_inv, c).ring


def _coerce(ring: PolyRing, f) -> Polynomial:
    if isinstance(f, Polynomial):
        if f.ring == ring:
            return f
        if f.ring.nvars == 0 or f.degree() <= 0:
            return ring.const(f.constant_value())
        raise InvariantViolation("polynomial lives in the wrong ring")
    if isinstance(f, str):
        return ring.parse(f)
    return ring.const(f)


def _check(layout, f: Polynomial, what: str):
    if layout is not None and not is_invariant(layout, layout.full(), f):
        raise InvariantViolation(f"{what} is not invariant")


def _embed_at(poly: Polynomial, target_ring: PolyRing, offset: dict, q: Quiver) -> Polynomial:
    """Rename x[v,j] to x[v, offset(v)+j]."""
    target = []
    for (v, j) in poly.ring.variables:
        target.append(target_ring.index(v, offset.get(q.vertex_index(v), 0) + j))
    return poly.embed(target_ring, target)


# ----------------------------------------------------------------------
# CoHA
# ----------------------------------------------------------------------

def coha_mul(q: Quiver, a, b, f, g, route: str = "demazure") -> Polynomial:
    """m(f, g) in H_{a+b} for f in H_a and g in H_b.

    route "demazure": (-1)^{r_d} Delta_d^c(f g E_d) with d = (a, b);
    route "shuffle": sym over minimal coset representatives of E_d f g / S_d.
    """
    a, b = q.dim(a), q.dim(b)
    c = a + b
    f, g = _coerce(ring_of(q, a), f), _coerce(ring_of(q, b), g)
    if not a.is_zero():
        _check(ordinary_layout(q, a), f, "f")
    if not b.is_zero():
        _check(ordinary_layout(q, b), g, "g")
    if c.is_zero():
        return f * g
    lay = ordinary_layout(q, c)
    F = _embed_at(f, lay.ring, {}, q) * _embed_at(g, lay.ring, {k: a[k] for k in range(q.n)}, q)
    if a.is_zero() or b.is_zero():
        return F
    d = VectorComposition((a, b))
    if route == "shuffle":
        S = Setting.ordinary(q, c)
        return apply_merge(S, d, VectorComposition((c,)), GradedElement.of(d, F)).get(VectorComposition((c,))) \
            or lay.ring.zero()
    if route != "demazure":
        raise ValueError(f"unknown route {route!r}")
    for r in class_E_factors(q, c, d):
        F = F * r
    J = lay.parabolic(d)
    sign = -1 if relative_r(lay, lay.full(), J) % 2 else 1
    return relative_demazure(lay, lay.full(), J, F).scale(sign)


def coha_comul_component(q: Quiver, c, d: VectorComposition, f) -> Polynomial:
    """The d-component of the comultiplication: f itself, now in Lambda_d."""
    c = q.dim(c)
    f = _coerce(ring_of(q, c), f)
    if d.total != c:
        raise ValueError("composition does not match the dimension vector")
    _check(ordinary_layout(q, c), f, "f")
    return f


def multi_mul(setting: Setting, d, e, x: GradedElement) -> GradedElement:
    """m_d^e on T_c(H): (-1)^{r_d^e} Delta_d^e(E_d^e f) on the d-component."""
    beta = d.refines(e)
    if beta is None:
        raise ValueError(f"{setting.fmt(d)} does not refine {setting.fmt(e)}")
    f = x.get(d)
    if f is None:
        return GradedElement()
    q, lay = setting.quiver, setting.layout
    for r in class_E_factors(q, setting.c, d, e):
        f = f * r
    J_d, J_e = lay.parabolic(d), lay.parabolic(e)
    sign = -1 if relative_r(lay, J_e, J_d) % 2 else 1
    return GradedElement.of(e, relative_demazure(lay, J_e, J_d, f).scale(sign))


def multi_com(setting: Setting, e, d, x: GradedElement) -> GradedElement:
    """com_e^d on T_c(H): the e-component viewed in the finer slot d."""
    if d.refines(e) is None:
        raise ValueError(f"{setting.fmt(d)} does not refine {setting.fmt(e)}")
    f = x.get(e)
    return GradedElement() if f is None else GradedElement.of(d, f)


# ----------------------------------------------------------------------
# CoHM
# ----------------------------------------------------------------------

def _act_input(inv: InvolutionData, a: DimVector, b: DimVector, f, v):
    q = inv.quiver
    c = inv.D(a) + b
    lay = theta_layout(inv, c)
    f, v = _coerce(ring_of(q, a), f), _coerce(ring_of(inv, b), v)
    if not a.is_zero():
        _check(ordinary_layout(q, a), f, "f")
    if not b.is_zero():
        _check(theta_layout(inv, b), v, "v")
    # f sits on the slot weights of the first block, v after a(i) variables
    images = []
    from .operators import flag_blocks
    block = flag_blocks(lay, [a])[0] if not a.is_zero() else {}
    for (vert, j) in f.ring.variables:
        images.append(block[q.vertex_index(vert)][j - 1])
    F = f.substitute(images) if f.ring.nvars else lay.ring.const(f.constant_value())
    V = _embed_at(v, lay.ring, {k: a[k] for k in range(q.n)}, q) if v.ring.nvars \
        else lay.ring.const(v.constant_value())
    return c, lay, F * V


def cohm_act(inv: InvolutionData, a, b, f, v, route: str = "shuffle") -> Polynomial:
    """act(f, v) in the module piece at D(a) + b.

    route "shuffle": theta-sym of thetaE f v / thetaS over minimal coset reps;
    route "demazure": (-1)^{theta r_d} thetaDelta_c(f v thetaE h) with
    thetaDelta_d(h) = 1, i.e. the full-group Demazure sum.
    """
    q = inv.quiver
    a, b = q.dim(a), q.dim(b)
    c, lay, F = _act_input(inv, a, b, f, v)
    if a.is_zero():
        return F
    d = IsotropicVectorComposition((a,), b)
    inv.check_iso(d)
    if route == "shuffle":
        S = Setting.theta(inv, c)
        return theta_merge_polynomial(S, d, IsotropicVectorComposition((), c), F)
    if route != "demazure":
        raise ValueError(f"unknown route {route!r}")
    for r in theta_E_factors(lay, a, b):
        F = F * r
    J = lay.parabolic(d)
    h = find_demazure_preimage_of_one(lay, J)
    sign = -1 if theta_r(lay, J) % 2 else 1
    return demazure_sum(lay, lay.full(), F * h).scale(sign)


def cohm_coact(setting: Setting, e, d, x: GradedElement) -> GradedElement:
    """theta com_e^d: inclusion of the e-component into the finer slot d."""
    return apply_split(setting, e, d, x)


def hall_hilbert_series(q_or_inv, c, degree: int, d=None) -> list:
    """Graded dimensions of Lambda_d (d defaults to the one-part composition)."""
    q = q_or_inv.quiver if isinstance(q_or_inv, InvolutionData) else q_or_inv
    c = q.dim(c)
    lay = layout_for(q_or_inv, c)
    J = lay.full() if d is None else lay.parabolic(d)
    return _hilbert_series(lay, J, degree)


def orbit_basis(q_or_inv, c, degree: int) -> list:
    """Orbit-sum basis of H_c (or of the module piece) up to degree."""
    q = q_or_inv.quiver if isinstance(q_or_inv, InvolutionData) else q_or_inv
    c = q.dim(c)
    if c.is_zero():
        return [EMPTY_RING.one()]
    lay = layout_for(q_or_inv, c)
    return invariant_basis(lay, lay.full(), degree)
