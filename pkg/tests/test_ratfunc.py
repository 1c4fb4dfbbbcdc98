import pytest
import sympy as sp

from icobeltrami.exactnum import PHI, gn
from icobeltrami.linalg import BETA, GAMMA, Matrix, generate_group, klein_group
from icobeltrami.poly import Polynomial, poly
from icobeltrami.ratfunc import (
    IrrationalDataError,
    RationalFunction,
    RationalVectorField,
    averaged_field,
    curl_multiplier,
    is_beltrami,
    rf_conjugate,
    rf_curl,
    rf_equal,
    rf_group_average,
    sasakian_field,
    speed_identity,
)

x, y, z = sp.symbols("x y z")
R2 = 1 + x**2 + y**2 + z**2


def to_sympy(p: Polynomial):
    out = 0
    for exps, c in p.terms.items():
        coef = sp.Rational(c.r.numerator, c.r.denominator) + sp.Rational(c.s.numerator, c.s.denominator) * sp.sqrt(5)
        out += coef * x ** exps[0] * y ** exps[1] * z ** exps[2]
    return out


def field_to_sympy(v: RationalVectorField):
    return [to_sympy(c.num) / to_sympy(c.den) for c in v]


def sym_curl(f):
    fx, fy, fz = f
    return [sp.diff(fz, y) - sp.diff(fy, z), sp.diff(fx, z) - sp.diff(fz, x), sp.diff(fy, x) - sp.diff(fx, y)]


# written out independently of the package
B_SYMPY = [8 * (x * z - y) / R2**2, 8 * (x + y * z) / R2**2, 4 * (1 + z**2 - x**2 - y**2) / R2**2]


def test_sasakian_field_matches_closed_form():
    for ours, ref in zip(field_to_sympy(sasakian_field()), B_SYMPY):
        assert sp.simplify(ours - ref) == 0


def test_sasakian_curl_factor_against_sympy():
    for c, f in zip(sym_curl(B_SYMPY), B_SYMPY):
        assert sp.simplify(c - 4 / R2 * f) == 0
    b = sasakian_field()
    assert rf_equal(rf_curl(b), b.multiply(curl_multiplier()))
    assert is_beltrami(b)
    assert speed_identity(b, 16)
    assert not speed_identity(b, 15)


def test_averaged_field_against_sympy():
    # the β-average of B, computed directly in sympy, then scaled by 1/4
    perms = [(x, y, z), (y, z, x), (z, x, y)]
    avg = [0, 0, 0]
    for k, (a, b, c) in enumerate(perms):
        moved = [e.subs({x: a, y: b, z: c}, simultaneous=True) for e in B_SYMPY]
        # g⁻¹ v(g x) for the cyclic permutation g: rotate components back
        for i in range(3):
            avg[i] += moved[(i - k) % 3]
    f = field_to_sympy(averaged_field())
    for ours, ref in zip(f, avg):
        assert sp.simplify(ours - ref / 4) == 0
    for c, g in zip(sym_curl(f), f):
        assert sp.simplify(c - 4 / R2 * g) == 0
    assert sp.simplify(sum(g**2 for g in f) * R2**2 - 3) == 0


def test_average_over_trivial_group_is_identity():
    b = sasakian_field()
    assert rf_equal(rf_group_average(b, [Matrix.identity(3)]), b)


def test_klein_average_of_b_vanishes():
    assert rf_group_average(sasakian_field(), klein_group()).is_zero()


def test_cyclic_average_matches_closed_form():
    cyc = generate_group([BETA])
    assert rf_equal(rf_group_average(sasakian_field(), cyc, gn("1/4")), averaged_field())


def test_cross_multiplied_equality():
    num = poly(3, [(1, (1, 0, 0)), (2, (0, 0, 0))])
    den = poly(3, [(1, (0, 0, 2)), (1, (0, 0, 0))])
    doubled = RationalFunction(num.scale(2), den.scale(2))
    assert RationalFunction(num, den).equals(doubled)
    zero = RationalFunction(Polynomial.zero(3))
    v1 = RationalVectorField([RationalFunction(num, den), zero, zero])
    v2 = RationalVectorField([doubled, zero, zero])
    assert rf_equal(v1, v2)


def test_irrational_data_rejected():
    num = poly(3, [(PHI, (1, 0, 0))])
    zero = RationalFunction(Polynomial.zero(3))
    v = RationalVectorField([RationalFunction(num), zero, zero])
    with pytest.raises(IrrationalDataError):
        rf_equal(v, v)
    # an icosahedral average of rational data generally picks up √5
    with pytest.raises(IrrationalDataError):
        rf_group_average(sasakian_field(), [Matrix.identity(3), GAMMA])


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RationalFunction(poly(3, [(1, (0, 0, 0))]), Polynomial.zero(3))


def test_average_is_conjugation_invariant():
    f = averaged_field()
    assert rf_equal(rf_conjugate(f, BETA), f)
