"""Refinement and crossing data for the double cosets of S_8 relative to the
compositions (3,2,3) and (4,2,2).

Run: python3 demos/refinement_demo.py
"""
from qschur.quiver import a1_quiver
from qschur.schur import Setting
from qschur.weyl import crossing_datum, format_partitioning, refinement_datum


def main():
    q = a1_quiver()
    S = Setting.ordinary(q, 8)
    d, e = S.parse_comp("(3,2,3)"), S.parse_comp("(4,2,2)")
    lay = S.layout
    G = lay.G
    reps = G.min_double_coset_reps(lay.parabolic(d), lay.parabolic(e))
    print(f"{len(reps)} minimal double coset representatives")
    for w in reps:
        rd = refinement_datum(q, S.c, d, e, w)
        print(f"  w = {G.one_line(w)}  length {G.length(w):2d}  "
              f"e_hat = {S.fmt(rd.e_hat)}  d_hat = {S.fmt(rd.d_hat)}")
    w = G.from_word([(0, 3), (0, 4), (0, 5), (0, 6)])
    rd = refinement_datum(q, S.c, d, e, w)
    cd = crossing_datum(rd)
    print(f"\nw = {G.one_line(w)}")
    print(f"  lambda cap mu = {format_partitioning(rd.lam_mu, q)}")
    print(f"  mu cap lambda = {format_partitioning(rd.mu_lam, q)}")
    print(f"  u = {rd.u}, crossing word s_{list(reversed(cd.word))}")
    print("  " + " -> ".join(S.fmt(x) for x in cd.sequence))

if __name__ == "__main__":
    main()
