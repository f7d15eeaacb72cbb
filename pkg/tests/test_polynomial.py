import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qschur.operators import (
    blacktriangle, class_E, class_E_rel, class_S, class_S_rel, class_theta_E, class_theta_S, coset_maps,
    demazure_simple, demazure_sum, demazure_word, find_demazure_preimage_of_one, hilbert_series,
    invariant_basis, is_invariant, ordinary_layout, symmetrize, theta_layout, theta_r, theta_S_factors,
)
from qschur.poly import DivisionError, InvariantViolation, Polynomial, exact_divide, parse_polynomial
from qschur.quiver import DimVector, InvolutionData, a1_quiver, a2_quiver, jordan_quiver
from qschur.schur import vector_compositions

from oracles import evaluate, generic_point, symmetrize_at

A1 = a1_quiver()
JORDAN = jordan_quiver()


def a1_layout(n):
    return ordinary_layout(A1, A1.dim(n))


def theta_a1_layout(n, sigma):
    return theta_layout(InvolutionData.build(A1, sigma=sigma), A1.dim(n))


def polynomials(nvars, max_exp=3, max_terms=4):
    mono = st.tuples(*[st.integers(0, max_exp)] * nvars)
    coef = st.integers(-5, 5).filter(bool)
    return st.dictionaries(mono, coef, max_size=max_terms)


# -- arithmetic -------------------------------------------------------------

def test_product_and_division_examples():
    lay = a1_layout(2)
    x1, x2 = lay.x(0, 1), lay.x(0, 2)
    assert (x1 - x2) * (x1 + x2) == x1 ** 2 - x2 ** 2
    assert exact_divide(x1 ** 2 - x2 ** 2, x1 - x2) == x1 + x2


def test_non_divisible_raises():
    lay = a1_layout(2)
    x1, x2 = lay.x(0, 1), lay.x(0, 2)
    with pytest.raises(DivisionError):
        exact_divide(x1 ** 2 + x2, x1 - x2)


def test_rational_coefficients_print_and_parse():
    ring = a1_layout(2).ring
    f = parse_polynomial(ring, "1/2*x[1,1]^2 - 3*x[1,1]*x[1,2] + 2/3")
    assert f.to_text() == "1/2*x[1,1]^2 - 3*x[1,1]*x[1,2] + 2/3"
    assert parse_polynomial(ring, f.to_text()) == f


@settings(max_examples=80, deadline=None)
@given(polynomials(3), polynomials(3), polynomials(3))
def test_ring_axioms(a, b, c):
    ring = a1_layout(3).ring
    f, g, h = (Polynomial(ring, dict(t)) for t in (a, b, c))
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()
    if not g.is_zero():
        assert exact_divide(f * g, g) == f


@settings(max_examples=80, deadline=None)
@given(polynomials(3), st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=3, max_size=3))
def test_text_round_trip_and_evaluation(a, point):
    ring = a1_layout(3).ring
    f = Polynomial(ring, {m: Fraction(c, 3) for m, c in a.items()})
    g = parse_polynomial(ring, f.to_text())
    assert g == f
    assert evaluate(g, point) == evaluate(f, point)


# -- Demazure operators --------------------------------------------------------

def test_simple_demazure_examples():
    lay = a1_layout(2)
    x1, x2 = lay.x(0, 1), lay.x(0, 2)
    assert demazure_simple(lay, 0, 1, x1) == lay.ring.one()
    assert demazure_simple(lay, 0, 1, x1 ** 2) == x1 + x2
    assert demazure_sum(lay, lay.full(), x1) == lay.ring.one()


def test_demazure_sum_rank_one_type_b():
    lay = theta_a1_layout(3, sigma=1)
    assert demazure_sum(lay, lay.full(), lay.x(0, 1)) == lay.ring.const(2)


def test_staircase_values_pinned():
    # -thetaDelta_c(x1 x2^3 ... xn^(2n-1)) at sigma = 1, c = 2n+1
    got = []
    for n in range(1, 5):
        lay = theta_a1_layout(2 * n + 1, sigma=1)
        f = lay.ring.one()
        for k in range(1, n + 1):
            f = f * lay.x(0, k) ** (2 * k - 1)
        got.append((-demazure_sum(lay, lay.full(), f)).constant_value())
    assert got == [-2, 4, 8, -16]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.data())
def test_demazure_word_matches_sum_on_longest_element(n, data):
    lay = a1_layout(n)
    exps = data.draw(st.tuples(*[st.integers(0, 6 // n + 1)] * n).filter(lambda e: sum(e) <= 6))
    f = Polynomial(lay.ring, {exps: 1})
    G = lay.G
    w0 = G.longest(lay.full())
    assert demazure_word(lay, G.reduced_word(w0), f) == demazure_sum(lay, lay.full(), f)


@settings(max_examples=60, deadline=None)
@given(polynomials(3), polynomials(3), st.integers(1, 2))
def test_demazure_squares_to_zero_and_is_linear_over_invariants(a, b, j):
    lay = a1_layout(3)
    f = Polynomial(lay.ring, dict(a))
    g = Polynomial(lay.ring, dict(b))
    target, sign = lay.simple_map(0, j)
    g_inv = g + g.signed_permute(target, sign)
    assert demazure_simple(lay, 0, j, demazure_simple(lay, 0, j, f)).is_zero()
    assert demazure_simple(lay, 0, j, f * g_inv) == demazure_simple(lay, 0, j, f) * g_inv


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3, 1), (5, 1), (4, -1), (6, 1), (6, -1)]), polynomials(3, max_exp=4))
def test_demazure_sum_is_invariant_and_matches_pointwise_sum(case, a):
    c, sigma = case
    lay = theta_a1_layout(c, sigma)
    n = lay.ring.nvars
    f = Polynomial(lay.ring, {m[:n]: v for m, v in a.items()})
    J = lay.full()
    result = demazure_sum(lay, J, f)
    assert is_invariant(lay, J, result)
    # oracle: sum over the whole group of w(f / blacktriangle) at a random point
    maps = [lay.variable_map(w) for w in lay.G.parabolic_elements(J)]
    roots = lay.positive_roots(J)
    pt = generic_point(n, [(m, roots) for m in maps])
    assert evaluate(result, pt) == symmetrize_at(maps, f, roots, pt)


@pytest.mark.parametrize("c,sigma", [(2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (2, -1), (4, -1), (6, -1)])
def test_preimage_of_one_exists(c, sigma):
    lay = theta_a1_layout(c, sigma)
    h = find_demazure_preimage_of_one(lay, lay.full())
    assert demazure_sum(lay, lay.full(), h) == lay.ring.one()


def test_preimage_of_one_type_a():
    for n in (2, 3):
        lay = a1_layout(n)
        h = find_demazure_preimage_of_one(lay, lay.full())
        assert demazure_sum(lay, lay.full(), h) == lay.ring.one()


# -- symmetrizers ----------------------------------------------------------------

def test_shuffle_collapse_a1():
    lay = a1_layout(2)
    x1, x2 = lay.x(0, 1), lay.x(0, 2)
    maps = coset_maps(lay, lay.full(), frozenset())
    assert symmetrize(maps, x1, [x2 - x1]) == -lay.ring.one()


def test_shuffle_single_coset_is_identity():
    lay = a1_layout(2)
    f = lay.x(0, 1) + lay.x(0, 2)
    maps = coset_maps(lay, lay.full(), lay.full())
    assert symmetrize(maps, f, []) == f


def test_shuffle_orbit_sum_jordan():
    lay = ordinary_layout(JORDAN, JORDAN.dim(2))
    maps = coset_maps(lay, lay.full(), frozenset())
    assert symmetrize(maps, lay.x(0, 1), []) == lay.x(0, 1) + lay.x(0, 2)


def test_residual_denominator_raises():
    lay = a1_layout(2)
    maps = coset_maps(lay, lay.full(), lay.full())
    with pytest.raises(InvariantViolation):
        symmetrize(maps, lay.ring.one(), [lay.x(0, 1) - lay.x(0, 2)])


@settings(max_examples=40, deadline=None)
@given(polynomials(3, max_exp=3))
def test_shuffle_matches_pointwise_oracle(a):
    lay = a1_layout(3)
    f = Polynomial(lay.ring, dict(a))
    J_small = frozenset({(0, 1)})
    f = f + lay.act(lay.G.simple(0, 1), f)          # make f invariant under s_1
    x = lay.x
    S = [x(0, 3) - x(0, 1), x(0, 3) - x(0, 2)]
    maps = coset_maps(lay, lay.full(), J_small)
    pt = generic_point(3, [(m, S) for m in maps])
    assert evaluate(symmetrize(maps, f, S), pt) == symmetrize_at(maps, f, S, pt)


# -- classes ------------------------------------------------------------------------

def test_classes_a1_and_jordan():
    c = A1.dim(2)
    lay = a1_layout(2)
    x1, x2 = lay.x(0, 1), lay.x(0, 2)
    assert class_S(A1, c, A1.comp(1, 1)) == x2 - x1
    assert class_E(A1, c, A1.comp(1, 1)) == lay.ring.one()
    jl = ordinary_layout(JORDAN, JORDAN.dim(2))
    assert class_E(JORDAN, JORDAN.dim(2), JORDAN.comp(1, 1)) == jl.x(0, 2) - jl.x(0, 1)
    assert class_S(A1, c, A1.comp(2)) == class_E(A1, c, A1.comp(2)) == lay.ring.one()


def test_relative_class_requires_refinement():
    c = A1.dim(3)
    with pytest.raises(DivisionError):
        class_S_rel(A1, c, A1.comp(2, 1), A1.comp(1, 2))


@pytest.mark.parametrize("q", [a1_quiver(), jordan_quiver(), a2_quiver()], ids=["a1", "jordan", "a2"])
def test_relative_classes_divide_exactly(q):
    dims = [DimVector((n,)) for n in range(1, 5)] if q.n == 1 else \
        [DimVector((a, b)) for a in range(4) for b in range(4) if 0 < a + b <= 4]
    for c in dims:
        comps = vector_compositions(q, c)
        for d, e in itertools.product(comps, comps):
            if d.refines(e) is None:
                continue
            S = class_S_rel(q, c, d, e)
            E = class_E_rel(q, c, d, e)
            assert S * class_S(q, c, e) == class_S(q, c, d)
            assert E * class_E(q, c, e) == class_E(q, c, d)


def test_theta_classes_jordan_even_orthogonal():
    inv = InvolutionData.build(JORDAN, sigma=1, varsigma=-1)
    c, a, b = JORDAN.dim(2), JORDAN.dim(1), JORDAN.dim(0)
    one = theta_layout(inv, c).ring.one()
    assert class_theta_S(inv, c, a, b) == one
    assert class_theta_E(inv, c, a, b) == one


def test_theta_S_symplectic_rank_one():
    inv = InvolutionData.build(A1, sigma=-1)
    lay = theta_layout(inv, A1.dim(2))
    assert class_theta_S(inv, A1.dim(2), A1.dim(1), A1.dim(0)) == lay.x(0, 1).scale(-2)


def test_blacktriangle_examples():
    lay = a1_layout(2)
    assert blacktriangle(lay) == lay.x(0, 1) - lay.x(0, 2)
    odd = theta_a1_layout(3, sigma=1)
    assert blacktriangle(odd) == odd.x(0, 1)
    symp = theta_a1_layout(2, sigma=-1)
    assert blacktriangle(symp) == symp.x(0, 1).scale(2)


def _one_vertex_two_blocks(max_rank):
    for sigma in (1, -1):
        for c in range(1, 2 * max_rank + 2):
            if sigma == -1 and c % 2:
                continue
            for a in range(1, c // 2 + 1):
                b = c - 2 * a
                if sigma == -1 and b % 2:
                    continue
                yield sigma, c, a, b


@pytest.mark.parametrize("sigma,c,a,b", list(_one_vertex_two_blocks(3)))
def test_blacktriangle_factorization(sigma, c, a, b):
    inv = InvolutionData.build(A1, sigma=sigma)
    lay = theta_layout(inv, A1.dim(c))
    J = lay.parabolic(inv.iso([a], b))
    S = lay.ring.one()
    for r in theta_S_factors(lay, A1.dim(a), A1.dim(b)):
        S = S * r
    sign = (-1) ** theta_r(lay, J)
    assert blacktriangle(lay) == (blacktriangle(lay, J) * S).scale(sign)


# -- invariants ------------------------------------------------------------------------

def test_invariant_bases():
    lay = a1_layout(2)
    assert [f.to_text() for f in invariant_basis(lay, lay.full(), 2)] == \
        ["1", "x[1,1] + x[1,2]", "x[1,1]^2 + x[1,2]^2", "x[1,1]*x[1,2]"]
    triv = invariant_basis(lay, frozenset(), 2)
    assert len(triv) == 6 and all(len(f.terms) == 1 for f in triv)
    sign = theta_a1_layout(2, sigma=1)
    assert [f.to_text() for f in invariant_basis(sign, sign.full(), 4)] == ["1", "x[1,1]^2", "x[1,1]^4"]


def test_hilbert_series_examples():
    assert hilbert_series(a1_layout(2), a1_layout(2).full(), 5) == [1, 1, 2, 2, 3, 3]
    assert hilbert_series(a1_layout(1), frozenset(), 4) == [1, 1, 1, 1, 1]
    sign = theta_a1_layout(2, sigma=1)
    assert hilbert_series(sign, sign.full(), 4) == [1, 0, 1, 0, 1]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_invariant_basis_elements_are_invariant_and_counted(n):
    lay = a1_layout(n)
    J = lay.full()
    basis = invariant_basis(lay, J, 5)
    assert all(is_invariant(lay, J, f) for f in basis)
    counts = [0] * 6
    for f in basis:
        counts[f.degree()] += 1
    assert counts == hilbert_series(lay, J, 5)
