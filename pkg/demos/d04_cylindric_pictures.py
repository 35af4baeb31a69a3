"""
Cylindric loops and toric shapes
================================

The border of a partition, continued periodically, is a loop on a
cylinder. Two loops bound a toric shape when one stays between the other
and its copy k rows lower; that happens for exactly the q-degrees of the
product.
"""

from qschubert import RectContext, complement, frame_view, is_toric, render, toric_support

ctx = RectContext(5, 11)
lam, mu = (6, 5, 4, 2), (6, 4, 3, 3, 2)

# the loops lam[0], lam[1], lam[2]; digits mark the box above each loop
print(render("loops", "ascii", ctx, lam))

# moving a frame along the loop shows the rotations of lam
for i in range(4):
    print("frame at step", i, "->", frame_view(lam, i, ctx))

# the strip between lam[0] and mu^vee[2]
muv = complement(mu, ctx)
print("mu^vee =", muv, " toric at d=2:", is_toric(muv, 2, lam, ctx))
print(render("toric", "ascii", ctx, lam, muv, 2))

print("toric support:", sorted(toric_support(lam, mu, ctx)))
