from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from icobeltrami.exactnum import (
    ONE,
    PHI,
    PHI_INV,
    SQRT5,
    ZERO,
    GoldenNumber,
    gn,
    gn_arith,
    gn_sign,
    gn_tau,
    parse_gn,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=60)
golden = st.builds(lambda r, s: gn(r, s), fractions, fractions)
nonzero_golden = golden.filter(lambda x: not x.is_zero())


def to_sympy(x: GoldenNumber):
    return sympy.Rational(x.r.numerator, x.r.denominator) + sympy.Rational(
        x.s.numerator, x.s.denominator
    ) * sympy.sqrt(5)


def decimal50(x: GoldenNumber) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 60
        root5 = Decimal(5).sqrt()
        r, s = x.r, x.s
        return Decimal(r.numerator) / Decimal(r.denominator) + Decimal(s.numerator) / Decimal(
            s.denominator
        ) * root5


def test_phi_identities():
    assert PHI * PHI == PHI + 1
    assert 1 / PHI == PHI - 1
    assert PHI**2 + PHI ** -2 + 1 == 4
    assert PHI_INV == PHI - 1


def test_tau_examples():
    assert gn_tau(PHI) == (1 - SQRT5) / 2
    assert gn_tau(PHI) == -PHI_INV
    assert gn_tau(gn("3/7")) == gn("3/7")
    assert gn_tau(gn_tau(SQRT5)) == SQRT5


def test_sign_examples():
    assert gn_sign(PHI - gn("8/5")) == 1
    assert gn_sign(ZERO) == 0
    assert gn_sign(gn_tau(PHI)) == -1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        gn_arith(ONE, ZERO, "div")


def test_gn_arith_kinds():
    assert gn_arith(PHI, PHI, "mul") == PHI + 1
    assert gn_arith(PHI, ONE, "sub") == PHI_INV
    with pytest.raises(ValueError):
        gn_arith(PHI, ONE, "pow")


def test_parse_roundtrip_examples():
    for text in ["0", "-3/4", "(1/2)√5", "1/2 + (1/2)√5", "-7 + (-3/11)√5"]:
        x = parse_gn(text)
        assert parse_gn(str(x)) == x
    assert parse_gn("1/2 + (1/2)√5") == PHI
    assert gn("1/2 + (1/2)√5") == PHI


def test_canonical_reduction():
    x = GoldenNumber(Fraction(6, 4), Fraction(-10, 8))
    assert x.key() == gn("3/2", "-5/4").key()
    assert hash(gn("2/4")) == hash(gn("1/2"))


def test_mixing_radicands_rejected():
    root3 = GoldenNumber(0, 1, d=3)
    assert root3 * root3 == 3
    assert root3 + 1 - root3 == 1
    with pytest.raises(ValueError):
        root3 + SQRT5


def test_float_and_decimal():
    assert float(PHI) == pytest.approx(1.618033988749895, abs=0)
    assert str(PHI.to_decimal(30))[:20] == "1.618033988749894848"


@settings(max_examples=300, deadline=None)
@given(golden, golden)
def test_tau_is_a_homomorphism(x, y):
    assert (x + y).tau() == x.tau() + y.tau()
    assert (x * y).tau() == x.tau() * y.tau()


@settings(max_examples=300, deadline=None)
@given(nonzero_golden)
def test_inverse(x):
    assert x * (1 / x) == 1
    assert x.inverse().inverse() == x


@settings(max_examples=80, deadline=None)
@given(golden, golden)
def test_arithmetic_matches_sympy(x, y):
    assert sympy.simplify(to_sympy(x * y) - to_sympy(x) * to_sympy(y)) == 0
    assert sympy.simplify(to_sympy(x - y) - (to_sympy(x) - to_sympy(y))) == 0
    if not y.is_zero():
        assert sympy.simplify(to_sympy(x / y) - to_sympy(x) / to_sympy(y)) == 0


@settings(max_examples=1000, deadline=None)
@given(golden)
def test_sign_agrees_with_50_digit_decimal(x):
    d = decimal50(x)
    expected = (d > 0) - (d < 0)
    assert gn_sign(x) == expected


@settings(max_examples=200, deadline=None)
@given(golden, golden)
def test_ordering_is_consistent_with_sign(x, y):
    assert (x < y) == (gn_sign(y - x) > 0)
