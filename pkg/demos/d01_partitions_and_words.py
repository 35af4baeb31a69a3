"""
Partitions, 01-words and rotations
==================================

A partition inside the k x (n-k) rectangle is the same thing as a 01-word
of length n with k ones. Rotating the word rotates the partition.
"""

from qschubert import RectContext, complement, conjugate, cyclic_shift, phi, word_of

# Gr(5, 11): partitions fit in a 5 x 6 box
ctx = RectContext(5, 11)
lam = (6, 5, 4, 2)

print("lambda      ", lam)
print("complement  ", complement(lam, ctx))
print("conjugate   ", conjugate(lam))
print("01-word     ", word_of(lam, ctx))

# phi counts the ones; it keeps going past n by adding k per period
print("phi_1..phi_11", [phi(lam, i, ctx) for i in range(1, 12)])
print("phi_-1, phi_22", phi(lam, -1, ctx), phi(lam, 22, ctx))

# S^i moves the word i places to the left
for i in range(4):
    print(f"S^{i}", cyclic_shift(lam, i, ctx), word_of(cyclic_shift(lam, i, ctx), ctx))

# a full turn comes back to the start
assert cyclic_shift(lam, ctx.n, ctx) == lam
