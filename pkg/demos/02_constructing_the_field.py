# From an 11-parameter scalar ansatz to the curl eigenfield I = V + W.
from icobeltrami.catalog import catalog
from icobeltrami.construct import b_as_function_of_a, point_with_a, run_pipeline
from icobeltrami.trigexpr import curl, divergence, taylor_component

spaces = run_pipeline()
for s in spaces:
    print(f"{s.stage:18s} dim={s.dimension}  free={''.join(s.free)}")

slope, intercept = b_as_function_of_a(spaces[-1])
print("last stage: b =", slope, "* a +", intercept)
print("a = 768 gives", point_with_a(spaces[-1], 768).to_json())

cat = catalog()
V, W, I = cat["V"], cat["W"], cat["I"]
print("terms in V_x:", len(V[0].terms))
print("curl V == W:", curl(V) == W, "  curl I == I:", curl(I) == I)
print("div V == 0:", divergence(V).is_zero())

# the Taylor series of V starts in degree 6
for d in range(8):
    print(d, "zero" if taylor_component(V[0], d).is_zero() else "nonzero")
print("768 * degree-6 part of V_x:")
print(taylor_component(V[0], 6).scale(768))
