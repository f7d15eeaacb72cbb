"""Merges and splits on the Jordan quiver and on A_1.

Run: python3 demos/merge_split_demo.py
"""
from qschur.poly import parse_polynomial
from qschur.quiver import a1_quiver, jordan_quiver
from qschur.schur import GradedElement, Setting, apply_merge, apply_split


def show(title, S, x):
    print(f"{title}: {x.to_json(S)}")


def main():
    for name, q in (("Jordan", jordan_quiver()), ("A_1", a1_quiver())):
        S = Setting.ordinary(q, 2)
        fine, coarse = S.parse_comp("(1,1)"), S.parse_comp("(2)")
        print(f"{name} quiver, c = 2")
        for text in ("1", "x[1,1]", "x[1,1]^2"):
            x = GradedElement.of(fine, parse_polynomial(S.ring, text))
            merged = apply_merge(S, fine, coarse, x)
            show(f"  merge {text}", S, merged)
            show("    then split", S, apply_split(S, coarse, fine, merged))
        print()


if __name__ == "__main__":
    main()
