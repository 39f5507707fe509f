"""Congruence classes and what they say about the ring.

Grouping B_A by residue mod alpha splits K[B] into a direct sum of shifted
monomial ideals over the polynomial ring of the axis generators.  A class
of one element contributes a free summand T.  A larger class contributes
the ideal generated by its members after subtracting their componentwise
minimum.  The shape of these ideals decides the flags printed below.

Run:  python demos/decomposition.py
"""

from toricgb import decomposition_report, make_presentation

cases = {
    "twisted cubic (alpha=3, d=2)": make_presentation(2, 3, [(2, 1), (1, 2)]),
    "s^4, s^3t, st^3, t^4": make_presentation(2, 4, [(3, 1), (1, 3)]),
    "cubic plane, six generators": make_presentation(
        3, 3, [(2, 0, 1), (1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 2, 1), (0, 1, 2)]),
    "three generators, alpha = 4": make_presentation(3, 4, [(0, 1, 3), (2, 0, 2), (3, 1, 0)]),
}

for title, pres in cases.items():
    rep = decomposition_report(pres)
    print(title)
    print(f"  e = {rep.e}:  {rep.summary()}")
    for cl in rep.classes:
        if not cl.is_singleton:
            print(f"    shift h = {cl.h}, members {' < '.join(map(str, cl.members))}")
    print(f"  Cohen-Macaulay {rep.is_cohen_macaulay}, Buchsbaum {rep.is_buchsbaum}, "
          f"linear ideals {rep.thm46_condition}, reduction number {rep.reduction_number}")
    print()
