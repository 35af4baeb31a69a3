"""
Quantum products and the range of q-degrees
===========================================

The quantum product is computed by expanding classically with at most k
rows and then stripping n-rim hooks. The lowest and highest powers of q
that appear can be read off directly from the 01-words.
"""

from qschubert import RectContext, extremal_data, gw_invariant, quantum_product

ctx = RectContext(2, 4)
print("s21 * s21 in QH(Gr(2,4)):", quantum_product((2, 1), (2, 1), ctx))
print("s22 * s22 in QH(Gr(2,4)):", quantum_product((2, 2), (2, 2), ctx))

ctx = RectContext(5, 11)
lam, mu = (6, 5, 4, 2), (6, 4, 3, 3, 2)
prod = quantum_product(lam, mu, ctx)
print("degrees present:", sorted(prod.degrees()))
for d in sorted(prod.degrees()):
    print(f"  q^{d}: {len(prod.at_degree(d))} classes")

ext = extremal_data(lam, mu, ctx)
print(f"d_min = {ext.d_min} via a = {ext.a}: {ext.lambda_min} and {ext.mu_min}")
print(f"d_max = {ext.d_max} via b = {ext.b}: {ext.lambda_max} and {ext.mu_max}")

# a single three-point invariant
print("<(6,5,4,2), (6,4,3,3,2), (6,6,1)>_2 =", gw_invariant(lam, mu, (6, 6, 1), 2, ctx))
