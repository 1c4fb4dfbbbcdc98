# Rational Beltrami fields: the stereographic contact field B and its β-average F.
from icobeltrami.exactnum import gn
from icobeltrami.linalg import BETA, generate_group, klein_group
from icobeltrami.ratfunc import (
    averaged_field,
    curl_multiplier,
    is_beltrami,
    rf_curl,
    rf_equal,
    rf_group_average,
    sasakian_field,
    speed_identity,
)

B = sasakian_field()
print("B x curl B = 0:", is_beltrami(B))
print("curl B = 4/(1+r^2) B:", rf_equal(rf_curl(B), B.multiply(curl_multiplier())))
print("|B|^2 (1+r^2)^2 = 16:", speed_identity(B, 16))

# averaging over the Klein group kills it
print("Klein average is zero:", rf_group_average(B, klein_group()).is_zero())

# averaging over <β> does not
F = rf_group_average(B, generate_group([BETA]), gn("1/4"))
print("β-average equals F:", rf_equal(F, averaged_field()))
print("F_x numerator:", averaged_field()[0].num)
print("F still Beltrami:", is_beltrami(F), "  speed constant 3:", speed_identity(F, 3))
