import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qschur.hall import (
    coha_comul_component, coha_mul, cohm_act, cohm_coact, hall_hilbert_series, multi_com, multi_mul,
    orbit_basis, ring_of,
)
from qschur.poly import InvariantViolation, parse_polynomial
from qschur.quiver import DimVector, InvolutionData, a1_quiver, a2_quiver, jordan_quiver
from qschur.schur import GradedElement, Setting, apply_merge, apply_split

from oracles import binomial

A1 = a1_quiver()
JORDAN = jordan_quiver()
A2 = a2_quiver()


def jordan_theta(sigma, varsigma):
    return InvolutionData.build(JORDAN, sigma=sigma, varsigma=varsigma)


# -- CoHA ------------------------------------------------------------------

def test_a1_unit_product_vanishes():
    assert coha_mul(A1, 1, 1, 1, 1).is_zero()


def test_a1_mul_x_one():
    assert coha_mul(A1, 1, 1, "x[1,1]", 1).to_text() == "-1"


def test_jordan_unit_product_is_two():
    assert coha_mul(JORDAN, 1, 1, 1, 1).to_text() == "2"
    assert coha_mul(JORDAN, 1, 1, 1, 1, route="shuffle").to_text() == "2"


def test_mul_by_unit_of_h0():
    f = "x[1,1]^2 + x[1,2]^2"
    assert coha_mul(A1, 0, 2, 1, f) == parse_polynomial(ring_of(A1, A1.dim(2)), f)


def test_mul_rejects_non_invariant_input():
    with pytest.raises(InvariantViolation):
        coha_mul(A1, 2, 1, "x[1,1]", 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5), st.integers(0, 5))
def test_a1_antisymmetry(p, r):
    f, g = f"x[1,1]^{p}", f"x[1,1]^{r}"
    assert coha_mul(A1, 1, 1, f, g) == -coha_mul(A1, 1, 1, g, f)


def _coha_triples():
    out = []
    for q in (A1, JORDAN, A2):
        dims = [DimVector((1,)), DimVector((2,))] if q.n == 1 else [DimVector((1, 0)), DimVector((0, 1))]
        for a, b, c in itertools.product(dims, repeat=3):
            if (a + b + c).total <= 4:
                out.append((q, a, b, c))
    return out


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_coha_triples()), st.data())
def test_associativity(case, data):
    q, a, b, c = case
    f = data.draw(st.sampled_from(orbit_basis(q, a, 2)))
    g = data.draw(st.sampled_from(orbit_basis(q, b, 2)))
    h = data.draw(st.sampled_from(orbit_basis(q, c, 2)))
    left = coha_mul(q, a + b, c, coha_mul(q, a, b, f, g), h)
    right = coha_mul(q, a, b + c, f, coha_mul(q, b, c, g, h))
    assert left == right


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_coha_triples()), st.data())
def test_demazure_and_shuffle_routes_agree(case, data):
    q, a, b, _ = case
    f = data.draw(st.sampled_from(orbit_basis(q, a, 3)))
    g = data.draw(st.sampled_from(orbit_basis(q, b, 3)))
    assert coha_mul(q, a, b, f, g) == coha_mul(q, a, b, f, g, route="shuffle")


def test_comultiplication_components():
    S = Setting.ordinary(A1, 2)
    f = parse_polynomial(S.ring, "x[1,1]*x[1,2]")
    assert coha_comul_component(A1, 2, A1.comp(1, 1), f) == f
    assert coha_comul_component(A1, 2, A1.comp(2), f) == f


@pytest.mark.parametrize("q,factor", [(A1, 0), (JORDAN, binomial(2, 1))], ids=["a1", "jordan"])
def test_mul_after_comul_gives_relation_constant(q, factor):
    S = Setting.ordinary(q, 2)
    d, e = q.comp(1, 1), q.comp(2)
    for f in orbit_basis(q, 2, 4):
        y = multi_mul(S, d, e, multi_com(S, e, d, GradedElement.of(e, f)))
        assert y == GradedElement.of(e, f.scale(factor))


def test_multi_mul_two_blocks_is_coha_mul():
    S = Setting.ordinary(A1, 2)
    d, e = A1.comp(1, 1), A1.comp(2)
    F = parse_polynomial(S.ring, "x[1,1]")
    assert multi_mul(S, d, e, GradedElement.of(d, F)).get(e) == coha_mul(A1, 1, 1, "x[1,1]", 1)


def test_multi_mul_length_three_is_iterated():
    S = Setting.ordinary(A1, 3)
    d, e = A1.comp(1, 1, 1), A1.comp(3)
    for f in S.basis(d, 3):
        x = GradedElement.of(d, f)
        direct = multi_mul(S, d, e, x)
        left = multi_mul(S, A1.comp(2, 1), e, multi_mul(S, d, A1.comp(2, 1), x))
        right = multi_mul(S, A1.comp(1, 2), e, multi_mul(S, d, A1.comp(1, 2), x))
        assert direct == left == right


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(A1, 3), (JORDAN, 3), (A2, (2, 1))]), st.data())
def test_multi_structures_match_merges_and_splits(case, data):
    q, c = case
    S = Setting.ordinary(q, c)
    comps = S.compositions()
    d = data.draw(st.sampled_from(comps))
    e = data.draw(st.sampled_from([x for x in comps if d.refines(x) is not None]))
    f = data.draw(st.sampled_from(S.basis(d, 3)))
    x = GradedElement.of(d, f)
    assert multi_mul(S, d, e, x) == apply_merge(S, d, e, x)
    g = data.draw(st.sampled_from(S.basis(e, 3)))
    y = GradedElement.of(e, g)
    assert multi_com(S, e, d, y) == apply_split(S, e, d, y)


# -- CoHM ----------------------------------------------------------------------

def test_act_examples():
    inv = jordan_theta(1, -1)
    assert cohm_act(inv, 1, 0, 1, 1).to_text() == "2"
    assert cohm_act(inv, 1, 0, "x[1,1]", 1).is_zero()
    v = "x[1,1]^2"
    assert cohm_act(inv, 0, 2, 1, v) == parse_polynomial(ring_of(inv, JORDAN.dim(2)), v)


def test_act_routes_agree_on_examples():
    inv = jordan_theta(1, -1)
    for f in orbit_basis(JORDAN, 1, 3):
        assert cohm_act(inv, 1, 0, f, 1) == cohm_act(inv, 1, 0, f, 1, route="demazure")


STRUCTURES = [(s, v) for s in (1, -1) for v in (1, -1)]


def _module_cases():
    out = []
    for sigma, varsigma in STRUCTURES:
        for a, a2, b in itertools.product((1,), (1,), (0, 1, 2)):
            if sigma == -1 and b % 2:
                continue
            if 2 * a + 2 * a2 + b <= 4:
                out.append((sigma, varsigma, a, a2, b))
    return out


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_module_cases()), st.data())
def test_module_axiom(case, data):
    sigma, varsigma, a, a2, b = case
    inv = jordan_theta(sigma, varsigma)
    f = data.draw(st.sampled_from(orbit_basis(JORDAN, a, 2)))
    g = data.draw(st.sampled_from(orbit_basis(JORDAN, a2, 2)))
    v = data.draw(st.sampled_from(orbit_basis(inv, JORDAN.dim(b), 2)))
    left = cohm_act(inv, a + a2, b, coha_mul(JORDAN, a, a2, f, g), v)
    right = cohm_act(inv, a, 2 * a2 + b, f, cohm_act(inv, a2, b, g, v))
    assert left == right


def test_coaction_is_inclusion():
    inv = jordan_theta(1, -1)
    T = Setting.theta(inv, 2)
    e, d = T.parse_comp("(|2)"), T.parse_comp("(1|0)")
    v = GradedElement.of(e, parse_polynomial(T.ring, "x[1,1]^2"))
    assert cohm_coact(T, e, e, v) == v
    assert cohm_coact(T, e, d, v) == GradedElement.of(d, v.get(e))
    assert cohm_coact(T, e, d, GradedElement.of(d, T.ring.one())).is_zero()


def test_act_after_coact_constant():
    inv = jordan_theta(1, -1)
    T = Setting.theta(inv, 2)
    e, d = T.parse_comp("(|2)"), T.parse_comp("(1|0)")
    for v in orbit_basis(inv, JORDAN.dim(2), 4):
        y = apply_merge(T, d, e, cohm_coact(T, e, d, GradedElement.of(e, v)))
        assert y == GradedElement.of(e, v.scale(2))


# -- Hilbert series ------------------------------------------------------------------

def test_hilbert_series_examples():
    assert hall_hilbert_series(A1, 2, 5) == [1, 1, 2, 2, 3, 3]
    assert hall_hilbert_series(A1, 1, 3) == [1, 1, 1, 1]
    assert hall_hilbert_series(InvolutionData.build(A1, sigma=1), 2, 4) == [1, 0, 1, 0, 1]


def test_orbit_basis_of_zero_is_unit():
    assert [f.to_text() for f in orbit_basis(A1, 0, 3)] == ["1"]
