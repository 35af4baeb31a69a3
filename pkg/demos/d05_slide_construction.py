"""
The sliding construction
========================

Columns of the rotated mu are labelled from the top, pushed up against
lam, and then every row is pushed left. The result is a shape nu with an
LR filling of nu/lam, and that filling is the only one.
"""

from qschubert import RectContext, enumerate_lr_fillings, quantum_slide, rho, slide

ctx = RectContext(5, 11)
lam, mu = (4, 3, 1), (5, 4, 4)

print("gaps rho =", rho(lam, mu, ctx))
nu, witness, trace = slide(lam, mu, ctx)
for name, diagram in trace.stages:
    print(name)
    for row in diagram.grid():
        print("   ", row)
print("nu =", nu)
print("witness:", witness.rows())
print("all LR fillings equal the witness:", list(enumerate_lr_fillings(lam, mu, nu)) == [witness])

# in degree d the same slide runs in a taller box cut from the cylinder
q = quantum_slide((6, 5, 4, 2), (6, 4, 3, 3, 2), 2, ctx)
print("box rows", q.top, "to", q.bottom, "columns from", q.left)
print("nu tilde =", q.nu_tilde, " last k parts:", q.nu)
