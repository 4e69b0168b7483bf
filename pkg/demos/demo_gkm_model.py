"""Tour of the GKM fixed-point model: classes, restrictions, operators.

Run:  python3 demos/demo_gkm_model.py
"""

from schubertcalc import (
    all_reduced_words,
    bottom_restriction,
    chern_class,
    is_gkm,
    left_dd,
    named,
    perm_to_element,
    render,
    restrict,
    right_dd,
    schubert_class,
)

s3 = named("A2")
perm = lambda s: perm_to_element(s3, tuple(int(c) for c in s))

print("The Weyl group S_3, its Schubert classes as restriction lists")
print("-" * 64)
for w in s3.elements():
    cls = schubert_class(w)
    row = ", ".join(f"{v.describe()}: {render(cls.value(v), 'y')}" for v in s3.elements())
    print(f"S_{w.describe()} = [{row}]   (GKM: {is_gkm(cls)})")

print()
print("Restriction from any reduced word gives the same answer")
print("-" * 64)
w0 = perm("321")
v = perm("213")
for word in all_reduced_words(w0):
    print(f"word {word}:  S_213|_321 = {render(restrict(v, w0, word=word), 'y')}")

print()
print("Bottom restrictions are products of the inverted positive roots")
print("-" * 64)
for w in s3.elements():
    print(f"S_{w.describe()}|_{w.describe()} = {render(bottom_restriction(w))}")

print()
print("Divided differences walk the Schubert basis")
print("-" * 64)
alpha = s3.simple_root(1)
S = schubert_class(w0)
print("right dd_1 of S_321 equals S_231:", right_dd(alpha, S) == schubert_class(perm("231")))
print("left  dd_1 of S_321 equals S_312:", left_dd(alpha, S) == schubert_class(perm("312")))

print()
print("Chern classes are invariant lists of root images")
print("-" * 64)
c = chern_class(s3, alpha)
for w in s3.elements():
    print(f"c_(-a1)|_{w.describe()} = {render(c.value(w), 'y')}")
