"""CoHA products for A_1 and the Jordan quiver, and the CoHM action for the
Jordan quiver with an involution.

Run: python3 demos/hall_demo.py
"""
from qschur.hall import coha_mul, cohm_act, hall_hilbert_series
from qschur.quiver import InvolutionData, a1_quiver, jordan_quiver


def main():
    a1, jordan = a1_quiver(), jordan_quiver()
    print("A_1:    m(1, 1) =", coha_mul(a1, 1, 1, 1, 1).to_text())
    print("A_1:    m(x, 1) =", coha_mul(a1, 1, 1, "x[1,1]", 1).to_text())
    print("A_1:    m(1, x) =", coha_mul(a1, 1, 1, 1, "x[1,1]").to_text())
    print("Jordan: m(1, 1) =", coha_mul(jordan, 1, 1, 1, 1).to_text())
    print("Jordan: m(x, 1) =", coha_mul(jordan, 1, 1, "x[1,1]", 1).to_text())
    print("A_1 graded dimensions of H_2 up to degree 6:", hall_hilbert_series(a1, 2, 6))
    for sigma in (1, -1):
        for varsigma in (1, -1):
            inv = InvolutionData.build(jordan, sigma=sigma, varsigma=varsigma)
            print(f"Jordan sigma={sigma:+d} varsigma={varsigma:+d}: act(1, 1) =",
                  cohm_act(inv, 1, 0, 1, 1).to_text())


if __name__ == "__main__":
    main()
