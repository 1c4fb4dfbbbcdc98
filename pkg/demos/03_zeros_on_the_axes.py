# Zeros of I on the 62 symmetry rays, and a Newton search away from them.
import numpy as np

from icobeltrami.catalog import catalog
from icobeltrami.dynamics import (
    eval_field,
    limsup_probe,
    limsup_target,
    line_zero_map,
    newton_zero_search,
    upsilon,
    upsilon_roots,
)
from icobeltrami.exactnum import PHI

I = catalog()["I"]

# on the ray through (φ, 1, 0) the field is (φΥ(s), Υ(s), 0)
rep = upsilon_roots(0.0, 20.0)
print("roots of Υ on [0, 20]:", np.round(rep.roots, 10))
s0 = rep.first_positive_root()
print("I at s0·(φ,1,0):", eval_field(I, (float(PHI) * s0, s0, 0.0)))

# Υ(s)/s along s = 2πℓ, 2ℓ a Fibonacci number, creeps up to 2√5/φ
for s, r in limsup_probe(range(1, 9)):
    print(f"s={s:14.2f}  ratio={r:.9f}")
print("target", limsup_target())

s = np.linspace(0, 20, 9)
print("Υ on a coarse grid:", np.round(upsilon(s), 4))

reports = line_zero_map(I, 10.0)
print(len(reports), "rays; roots on one of each class:")
for cls in "FVE":
    r = next(r for r in reports if r.line_class == cls)
    print(" ", cls, np.round(r.roots, 6))

# Newton from random starts; candidates off every symmetry ray are reported as data
found = newton_zero_search(I, box=6, starts=200)
for c in found:
    tag = "on a ray" if c.on_symmetry_line else "off the rays"
    print(np.round(c.point, 9), f"res={c.residual:.1e}", tag)
