"""Walk through the B_A enumeration for a small simplicial monoid.

The monoid lives in Z^3 with alpha = 4.  Besides the three axis points
(4,0,0), (0,4,0), (0,0,4) it has three further Hilbert basis elements:

    a1 = (0,1,3),  a2 = (2,0,2),  a3 = (3,1,0)

B_A is the finite set of monoid elements from which no axis multiple can be
subtracted without leaving the monoid.  It is built layer by layer: a layer
t element is a sum of t non-axis generators, and every candidate sum that
repeats a known value or admits such a subtraction is rejected.  The
rejected representations become the first batch of candidate leading
monomials.

Run:  python demos/enumeration_walkthrough.py
"""

from toricgb import enumerate_BA, make_presentation, member_B, reduction_number


def rep_text(mu):
    parts = []
    for i, k in enumerate(mu, start=1):
        if k:
            parts.append(f"{k if k > 1 else ''}a{i}")
    return "+".join(parts) or "0"


pres = make_presentation(3, 4, [(0, 1, 3), (2, 0, 2), (3, 1, 0)])
table, rejected = enumerate_BA(pres)

print("B_A by degree")
for t, layer in enumerate(table.layers):
    cells = ", ".join(f"{rep_text(e.mu)}={e.value}" for e in layer)
    print(f"  degree {t}: {cells}")
print(f"#B_A = {len(table)}, reduction number = {reduction_number(table)}")
print()

print("Rejected representations (leading-monomial candidates)")
for r in sorted(rejected, key=lambda r: (r.degree, r.mu)):
    why = "value already seen" if r.duplicate else "an axis multiple can be removed"
    print(f"  {r.degree}: {rep_text(r.mu):<12} {str(r.value):<12} {why}")
print()

# 4a1 + a2 gets rejected even though nothing else reaches (2,4,14) first:
# taking away 4*u2 lands back in B.
ok, (b, a) = member_B((2, 4, 10), table, pres)
print("(2,4,14) - (0,4,0) = (2,4,10) lies in B:", ok)
print(f"  witness: {b} in B_A plus {a} in the axis monoid")
