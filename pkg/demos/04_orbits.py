# RK4 orbits of x' = I(x).
import numpy as np

from icobeltrami.catalog import catalog
from icobeltrami.dynamics import rk4_convergence, rk4_orbit, upsilon_roots
from icobeltrami.exactnum import PHI

I = catalog()["I"]

rec = rk4_orbit(I, (5, 6, 7), t_end=1.0)
print(len(rec.times), "samples; endpoint", rec.endpoint)
with open("orbit_567.csv", "w") as fh:
    fh.write(rec.to_csv())

# halve the step, the error drops by about 2^4
rep = rk4_convergence(I)
print("errors", rep.errors, "ratio", round(rep.ratio, 2), "order", round(rep.order, 3))

# a point on a zero ray stays put
s0 = upsilon_roots(0, 20).first_positive_root()
x0 = np.array([float(PHI) * s0, s0, 0.0])
still = rk4_orbit(I, x0, 10.0)
print("max drift from a fixed point:", np.max(np.linalg.norm(still.points - x0, axis=1)))

# the flow near the origin is very slow (I vanishes to order 5 there)
slow = rk4_orbit(I, (0.1, 0.2, 0.3), 10.0, h=0.01)
print("start", slow.points[0], "after t=10", slow.endpoint)
