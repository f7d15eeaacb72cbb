import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qschur.operators import class_E_rel, class_S_rel, coset_maps, is_invariant, relative_demazure, relative_r
from qschur.poly import InvariantViolation, parse_polynomial
from qschur.quiver import InvolutionData, QuiverError, a1_quiver, a2_quiver, jordan_quiver
from qschur.schur import (
    Cross, Cup, GradedElement, Idem, Merge, Setting, Split, apply_crossing, apply_idempotent, apply_merge,
    apply_poly, apply_split, apply_word, basis_independence_check, bott_samelson_element, crossing_data_for,
    exact_rank, format_word, operator_counterexample, operator_equal, operator_matrix, parse_word, word,
)
from qschur.weyl import weyl_group

from oracles import binomial, evaluate, generic_point, symmetrize_at

A1 = a1_quiver()
JORDAN = jordan_quiver()


def elem(setting, comp, text):
    d = setting.parse_comp(comp)
    return d, GradedElement.of(d, parse_polynomial(setting.ring, text))


def comp(setting, text):
    return setting.parse_comp(text)


# -- merges and splits ---------------------------------------------------------

def test_a1_merge_examples():
    S = Setting.ordinary(A1, 2)
    d, x = elem(S, "(1,1)", "x[1,1]")
    e = comp(S, "(2)")
    assert apply_merge(S, d, e, x) == elem(S, "(2)", "-1")[1]
    assert apply_merge(S, d, e, elem(S, "(1,1)", "1")[1]).is_zero()


def test_jordan_merge_is_orbit_sum():
    S = Setting.ordinary(JORDAN, 2)
    d, x = elem(S, "(1,1)", "x[1,1]")
    assert apply_merge(S, d, comp(S, "(2)"), x) == elem(S, "(2)", "x[1,1] + x[1,2]")[1]


def test_merge_of_zero_and_of_other_slots():
    S = Setting.ordinary(A1, 3)
    d, e = comp(S, "(1,2)"), comp(S, "(3)")
    assert apply_merge(S, d, e, GradedElement()).is_zero()
    _, other = elem(S, "(2,1)", "x[1,3]")
    assert apply_merge(S, d, e, other).is_zero()


def test_merge_requires_refinement():
    S = Setting.ordinary(A1, 3)
    _, x = elem(S, "(2,1)", "1")
    with pytest.raises(QuiverError):
        apply_merge(S, comp(S, "(2,1)"), comp(S, "(1,2)"), x)


def test_split_is_inclusion():
    S = Setting.ordinary(A1, 2)
    e, x = elem(S, "(2)", "x[1,1] + x[1,2]")
    d = comp(S, "(1,1)")
    assert apply_split(S, e, d, x) == elem(S, "(1,1)", "x[1,1] + x[1,2]")[1]
    _, other = elem(S, "(1,1)", "x[1,1]")
    assert apply_split(S, e, d, other).is_zero()


def test_composite_split_equals_direct_split():
    S = Setting.ordinary(A1, 3)
    e, x = elem(S, "(3)", "x[1,1]*x[1,2]*x[1,3]")
    mid, d = comp(S, "(1,2)"), comp(S, "(1,1,1)")
    assert apply_split(S, mid, d, apply_split(S, e, mid, x)) == apply_split(S, e, d, x)


def test_poly_idempotent_crossing():
    S = Setting.ordinary(A1, 2)
    e, x = elem(S, "(2)", "x[1,1]^2 + x[1,2]^2")
    g = parse_polynomial(S.ring, "x[1,1] + x[1,2]")
    assert apply_poly(S, e, g, x) == GradedElement.of(e, x.get(e) * g)
    assert apply_idempotent(S, e, x) == x
    assert apply_idempotent(S, comp(S, "(1,1)"), x).is_zero()
    d, y = elem(S, "(1,1)", "x[1,1]")
    assert apply_crossing(S, d, 1, y) == elem(S, "(1,1)", "-1")[1]


def test_cup_with_non_invariant_raises():
    S = Setting.ordinary(A1, 2)
    e, x = elem(S, "(2)", "1")
    with pytest.raises(InvariantViolation):
        apply_poly(S, e, parse_polynomial(S.ring, "x[1,1]"), x)


# -- theta merges ----------------------------------------------------------------

def jordan_theta(c, sigma=1, varsigma=-1):
    return Setting.theta(InvolutionData.build(JORDAN, sigma=sigma, varsigma=varsigma), c)


def test_theta_merge_two_term_symmetrization():
    T = jordan_theta(2)
    a = comp(T, "(1|0)")
    b = comp(T, "(|2)")
    assert apply_merge(T, a, b, elem(T, "(1|0)", "x[1,1]")[1]).is_zero()
    assert apply_merge(T, a, b, elem(T, "(1|0)", "x[1,1]^2")[1]) == elem(T, "(|2)", "2*x[1,1]^2")[1]


def test_theta_split_is_inclusion():
    T = jordan_theta(2)
    e, x = elem(T, "(|2)", "x[1,1]^2")
    assert apply_split(T, e, comp(T, "(1|0)"), x) == elem(T, "(1|0)", "x[1,1]^2")[1]


@pytest.mark.parametrize("text", ["1", "x[1,1]", "x[1,1]^2*x[1,2]", "x[1,1]^3 + 2*x[1,2]"])
def test_finite_theta_merge_matches_ordinary(text):
    T = jordan_theta(4)
    O = Setting.ordinary(JORDAN, 2)
    got = apply_merge(T, comp(T, "(1,1|0)"), comp(T, "(2|0)"), elem(T, "(1,1|0)", text)[1])
    want = apply_merge(O, comp(O, "(1,1)"), comp(O, "(2)"), elem(O, "(1,1)", text)[1])
    assert got.get(comp(T, "(2|0)")).to_text() == want.get(comp(O, "(2)")).to_text()


# -- properties of merges ------------------------------------------------------------

def _merge_cases():
    out = []
    for q, dims in ((A1, [(n,) for n in range(2, 5)]), (JORDAN, [(n,) for n in range(2, 4)]),
                    (a2_quiver(), [(1, 1), (2, 1), (1, 2), (2, 2)])):
        for c in dims:
            S = Setting.ordinary(q, c)
            comps = S.compositions()
            for d, e in itertools.product(comps, comps):
                if d != e and d.refines(e) is not None:
                    out.append((S, d, e))
    return out


MERGE_CASES = _merge_cases()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(MERGE_CASES), st.data())
def test_merge_matches_pointwise_formula(case, data):
    S, d, e = case
    lay = S.layout
    f = data.draw(st.sampled_from(S.basis(d, 3)))
    got = apply_merge(S, d, e, GradedElement.of(d, f)).get(e)
    got = lay.ring.zero() if got is None else got
    assert is_invariant(lay, lay.parabolic(e), got)
    E = class_E_rel(S.quiver, S.c, d, e)
    Srel = class_S_rel(S.quiver, S.c, d, e)
    maps = coset_maps(lay, lay.parabolic(e), lay.parabolic(d))
    pt = generic_point(lay.ring.nvars, [(m, [Srel]) for m in maps])
    assert evaluate(got, pt) == symmetrize_at(maps, E * f, [Srel], pt)
    if not got.is_zero():
        assert got.degree() == f.degree() + E.degree() - Srel.degree()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(MERGE_CASES), st.data())
def test_merge_equals_signed_demazure(case, data):
    S, d, e = case
    lay = S.layout
    f = data.draw(st.sampled_from(S.basis(d, 4)))
    E = class_E_rel(S.quiver, S.c, d, e)
    Je, Jd = lay.parabolic(e), lay.parabolic(d)
    got = apply_merge(S, d, e, GradedElement.of(d, f)).get(e) or lay.ring.zero()
    want = relative_demazure(lay, Je, Jd, E * f).scale((-1) ** relative_r(lay, Je, Jd))
    assert got == want


# -- words and identities -----------------------------------------------------------------

def test_word_round_trip():
    S = Setting.ordinary(A1, 2)
    text = "merge[(1,1)->(2)] * cup[(1,1); x[1,1]] * split[(2)->(1,1)]"
    w = parse_word(S, text)
    assert format_word(S, w) == text
    assert apply_word(S, w, elem(S, "(2)", "1")[1]) == elem(S, "(2)", "-1")[1]


def test_non_composable_word_rejected():
    S = Setting.ordinary(A1, 3)
    with pytest.raises(QuiverError):
        word(S, Merge(comp(S, "(1,2)"), comp(S, "(3)")), Split(comp(S, "(3)"), comp(S, "(2,1)")))


def test_merge_associativity_a1():
    S = Setting.ordinary(A1, 3)
    d, e = comp(S, "(1,1,1)"), comp(S, "(3)")
    direct = word(S, Merge(d, e))
    left = word(S, Merge(comp(S, "(2,1)"), e), Merge(d, comp(S, "(2,1)")))
    right = word(S, Merge(comp(S, "(1,2)"), e), Merge(d, comp(S, "(1,2)")))
    assert operator_equal(S, direct, left, 5)
    assert operator_equal(S, direct, right, 5)


def test_hole_removal_a1():
    S = Setting.ordinary(A1, 2)
    e, d = comp(S, "(2)"), comp(S, "(1,1)")
    assert operator_equal(S, word(S, Merge(d, e), Split(e, d)), [], 6)


@pytest.mark.parametrize("parts", [(1, 1), (1, 2), (2, 2), (1, 3)])
def test_jordan_merge_split_is_coset_count(parts):
    n = sum(parts)
    S = Setting.ordinary(JORDAN, n)
    d, e = JORDAN.comp(*parts), JORDAN.comp(n)
    count = binomial(n, parts[0])
    assert operator_equal(S, word(S, Merge(d, e), Split(e, d)), [(count, word(S, Idem(e)))], 5)


def test_counterexample_reported():
    S = Setting.ordinary(A1, 2)
    e, d = comp(S, "(2)"), comp(S, "(1,1)")
    bad = operator_counterexample(S, word(S, Merge(d, e), Split(e, d)), word(S, Idem(e)), 2)
    assert bad is not None and bad[0] == e


# -- Bott-Samelson elements and rank -------------------------------------------------------

def test_identity_orbit_datum_gives_idempotent():
    S = Setting.ordinary(A1, 3)
    e = comp(S, "(2,1)")
    G = weyl_group(A1, S.c)
    cd = crossing_data_for(S, e, e, G.identity())
    w = bott_samelson_element(S, cd, S.ring.one())
    assert operator_equal(S, w, word(S, Idem(e)), 4)


def test_c8_example_builds_two_crossings():
    S = Setting.ordinary(A1, 8)
    G = weyl_group(A1, S.c)
    w = G.from_word([(0, j) for j in (3, 4, 5, 6)])
    cd = crossing_data_for(S, A1.comp(3, 2, 3), A1.comp(4, 2, 2), w)
    bs = bott_samelson_element(S, cd, S.ring.one())
    assert sum(isinstance(g, Cross) for g in bs.gens) == 2
    assert isinstance(bs.gens[0], Merge) and isinstance(bs.gens[-1], Split)
    assert bs.source == A1.comp(4, 2, 2) and bs.target == A1.comp(3, 2, 3)


def test_cup_must_be_invariant():
    S = Setting.ordinary(A1, 2)
    d = comp(S, "(2)")
    cd = crossing_data_for(S, d, d, weyl_group(A1, S.c).identity())
    with pytest.raises(InvariantViolation):
        bott_samelson_element(S, cd, parse_polynomial(S.ring, "x[1,1]"))


@pytest.mark.parametrize("q,c", [(A1, 1), (A1, 2), (JORDAN, 2)], ids=["a1-1", "a1-2", "jordan-2"])
def test_basis_elements_independent(q, c):
    report = basis_independence_check(Setting.ordinary(q, c), 3)
    assert report.full_rank
    if c == 1:
        assert report.count == 4  # cup by 1, x, x^2, x^3 on the single composition


def test_operator_matrix_rank_detects_dependence():
    S = Setting.ordinary(A1, 2)
    d = comp(S, "(1,1)")
    w = word(S, Cup(d, parse_polynomial(S.ring, "x[1,1] + x[1,2]")))
    twice = word(S, Cup(d, parse_polynomial(S.ring, "2*x[1,1] + 2*x[1,2]")))
    assert operator_matrix(S, [w, twice], 2).rank() == 1


def test_exact_rank_falls_back_when_modular_rank_drops():
    p = (1 << 61) - 1
    assert exact_rank([[p, 0], [0, 1]]) == 2
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([]) == 0


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_exact_rank_matches_fraction_elimination(rows):
    from fractions import Fraction
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    for col in range(3):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                t = mat[i][col] / mat[rank][col]
                mat[i] = [a - t * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    assert exact_rank(rows) == rank


def test_graded_element_json_round_trip():
    S = Setting.ordinary(A1, 2)
    x = elem(S, "(1,1)", "1/2*x[1,1]")[1] + elem(S, "(2)", "x[1,1]*x[1,2]")[1]
    assert GradedElement.from_json(S, x.to_json(S)) == x
