"""
Littlewood-Richardson coefficients and classical products
=========================================================
"""

from qschubert import RectContext, enumerate_lr_fillings, lr_coefficient, pieri_row, schubert_product

# the smallest interesting coefficient: two fillings of (3,2,1)/(2,1)
print("c^{321}_{21,21} =", lr_coefficient((2, 1), (2, 1), (3, 2, 1)))
for t in enumerate_lr_fillings((2, 1), (2, 1), (3, 2, 1)):
    print("   ", t.rows())

# products in a Grassmannian drop everything that does not fit the box
ctx = RectContext(2, 4)
print("s1 * s1 in Gr(2,4):", schubert_product((1,), (1,), ctx))
print("s21 * s21 in Gr(2,4):", schubert_product((2, 1), (2, 1), ctx))

# Pieri: multiplying by a single row adds a horizontal strip
print("s1 * s(2) in Gr(2,5):", pieri_row((1,), 2, RectContext(2, 5)))

# a class times its complement is the point class
ctx = RectContext(5, 11)
print("s431 * s(complement):", schubert_product((4, 3, 1), (6, 6, 5, 3, 2), ctx))
