# Exact arithmetic in Q(√5) and the icosahedral rotation group.
from icobeltrami.exactnum import PHI, PHI_INV, SQRT5, gn, gn_sign
from icobeltrami.linalg import ALPHA, BETA, GAMMA, icosahedral_group, klein_group, orbit_of_line

print(PHI, "squared is", PHI * PHI)  # φ² = φ + 1
print("1/φ =", 1 / PHI, "  same as φ - 1:", 1 / PHI == PHI - 1)
print("τ(φ) =", PHI.tau(), "  (= -1/φ)")

# the sign test is exact, no floats involved
x = PHI - gn("8/5")
print("sign of φ - 8/5:", gn_sign(x), " float:", float(x))

g = icosahedral_group()
print("group order", g.order, " klein subgroup order", klein_group().order)
print("γ =")
print(GAMMA)

# the three families of symmetry axes
for name, d in [("5-fold", (PHI, 1, 0)), ("3-fold", (1, 1, 1)), ("2-fold", (1, 0, 0))]:
    print(name, "rays:", len(orbit_of_line(g, d)))
