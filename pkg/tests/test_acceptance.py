"""The eleven acceptance criteria, each run exactly with its full parameter range.

Every test prints one PASS/FAIL line. Criteria 3 and 6 are known to fail and
the failure is reported rather than hidden.
"""
from qschur.verify import run_suite


def report(capsys, number, title, ok, detail=""):
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    with capsys.disabled():
        print("\n" + line)
    return ok


def first_failures(res, k=3):
    return "; ".join(res.failures[:k])


def check_suite(capsys, number, title, name, **params):
    res = run_suite(name, **params)
    ok = report(capsys, number, title, res.passed, first_failures(res))
    assert ok, res.summary()


def test_criterion_01_merge_equals_demazure(capsys):
    check_suite(capsys, 1, "merge = signed relative Demazure", "merge-demazure", dim=4, degree=6)


def test_criterion_02_relations_a1(capsys):
    check_suite(capsys, 2, "A1 relations R1 R2 R3 R4", "relations-a1", dim=5, degree=5)


def test_criterion_03_relations_jordan(capsys):
    res = run_suite("relations-jordan", dim=5, degree=5)
    sections = ", ".join(f"{s}={'ok' if res.section_passed(s) else 'fail'}" for s in ("R1", "R2", "R3'", "R4"))
    ok = report(capsys, 3, "Jordan relations R1 R2 R3' R4", res.passed, f"{sections}; {first_failures(res, 1)}")
    assert ok, res.summary()


def test_criterion_04_transitivity(capsys):
    check_suite(capsys, 4, "transitivity of merges and splits", "transitivity", dim=4, degree=4)


def test_criterion_05_coha_associativity(capsys):
    check_suite(capsys, 5, "CoHA associativity and A1 antisymmetry", "coha-assoc", dim=4, degree=4)


def test_criterion_06_theta_suite(capsys):
    res = run_suite("theta-suite", dim=4, degree=5)
    parts = {
        "a": res.section_passed("(a) (-2)^n"),
        "b": res.section_passed("(b) triangle"),
        "c": res.section_passed("(c) preimage of 1") and res.section_passed("(c) Demazure vs shuffle"),
        "d": res.section_passed("(d) thetaR1") and res.section_passed("(d) thetaR2"),
    }
    ok = all(parts.values())
    detail = ", ".join(f"({k}) {'ok' if v else 'fail'}" for k, v in parts.items())
    report(capsys, 6, "theta suite", ok, f"{detail}; {first_failures(res, 2)}")
    assert ok, res.summary()


def test_criterion_07_cohm_module(capsys):
    check_suite(capsys, 7, "CoHM module axiom", "cohm-module", dim=4, degree=4)


def test_criterion_08_refinement(capsys):
    check_suite(capsys, 8, "refinement combinatorics", "refinement", dim=5, a3_dim=6, seed=0)


def test_criterion_09_double_cosets(capsys):
    check_suite(capsys, 9, "double coset representatives", "cosets", dim=14)


def test_criterion_10_basis_rank(capsys):
    check_suite(capsys, 10, "Bott-Samelson full column rank", "basis-rank", dim=3, degree=4)


def test_criterion_11_hall_schur(capsys):
    check_suite(capsys, 11, "Hall and Schur structures agree", "hall-schur", samples=100, seed=0)
