"""Closed forms of the named fields, entered independently of the ansatz."""

from __future__ import annotations

from functools import lru_cache

from .exactnum import PHI, PHI_INV, SQRT5, GoldenNumber, gn
from .linalg import Matrix
from .poly import Polynomial, poly
from .trigexpr import COS, SIN, LinearForm, TrigExpr, VectorField, cyclic_field, expr_mul

HALF = gn("1/2")
SQRT3 = GoldenNumber(0, 1, d=3)

# arguments of the triple products, as coefficient triples
_X2, _PY2, _Z2P = (HALF, 0, 0), (0, PHI / 2, 0), (0, 0, PHI_INV / 2)
_X2P, _Y2, _PZ2 = (PHI_INV / 2, 0, 0), (0, HALF, 0), (0, 0, PHI / 2)
_PX2, _Y2P, _Z2 = (PHI / 2, 0, 0), (0, PHI_INV / 2, 0), (0, 0, HALF)

_S, _C = SIN, COS


def _product(coef, var: int | None, *factors) -> TrigExpr:
    """``coef · x_var · Π kind(form)``; ``var`` None means no polynomial factor."""
    n = len(factors[0][1])
    p = Polynomial.constant(n, gn(coef))
    if var is not None:
        p = p * Polynomial.variable(n, var)
    out = TrigExpr.from_polynomial(p)
    for kind, coeffs in factors:
        out = expr_mul(out, TrigExpr.term(kind, LinearForm(coeffs)))
    return out


def _sum(*terms: TrigExpr) -> TrigExpr:
    total = TrigExpr.zero(terms[0].n)
    for t in terms:
        total = total + t
    return total


X, Y, Z = 0, 1, 2
_SIN_Y, _SIN_Z = (0, 1, 0), (0, 0, 1)


def _x_part() -> list[TrigExpr]:
    return [
        _product(2, X, (_S, _X2), (_S, _PY2), (_S, _Z2P)),
        _product(-2 * PHI, X, (_S, _X2P), (_S, _Y2), (_S, _PZ2)),
        _product(2 * PHI_INV, X, (_S, _PX2), (_S, _Y2P), (_S, _Z2)),
    ]


@lru_cache(maxsize=None)
def v_x() -> TrigExpr:
    return _sum(
        *_x_part(),
        _product(1, Y, (_S, _SIN_Z)),
        _product(2, Y, (_C, _X2), (_C, _PY2), (_S, _Z2P)),
        _product(-2, Y, (_C, _X2P), (_C, _Y2), (_S, _PZ2)),
        _product(1, Z, (_S, _SIN_Y)),
        _product(-2, Z, (_C, _X2), (_S, _PY2), (_C, _Z2P)),
        _product(2, Z, (_C, _PX2), (_S, _Y2P), (_C, _Z2)),
    )


@lru_cache(maxsize=None)
def w_x() -> TrigExpr:
    return _sum(
        _product(1, X, (_C, (0, 1, 0))),
        _product(-1, X, (_C, (0, 0, 1))),
        _product(-SQRT5, X, (_C, _X2), (_C, _PY2), (_C, _Z2P)),
        _product(PHI, X, (_C, _X2P), (_C, _Y2), (_C, _PZ2)),
        _product(PHI_INV, X, (_C, _PX2), (_C, _Y2P), (_C, _Z2)),
        _product(-(PHI_INV**2), Y, (_S, _X2), (_S, _PY2), (_C, _Z2P)),
        _product(-(PHI**2), Y, (_S, _X2P), (_S, _Y2), (_C, _PZ2)),
        _product(SQRT5, Y, (_S, _PX2), (_S, _Y2P), (_C, _Z2)),
        _product(-(PHI**2), Z, (_S, _X2), (_C, _PY2), (_S, _Z2P)),
        _product(-(PHI_INV**2), Z, (_S, _PX2), (_C, _Y2P), (_S, _Z2)),
        _product(SQRT5, Z, (_S, _X2P), (_C, _Y2), (_S, _PZ2)),
    )


@lru_cache(maxsize=None)
def v0_x() -> TrigExpr:
    return _sum(
        *_x_part(),
        _product(2 * PHI, Y, (_S, _SIN_Z)),
        _product(7 - SQRT5, Y, (_C, _X2), (_C, _PY2), (_S, _Z2P)),
        _product(2 * PHI**2, Y, (_C, _X2P), (_C, _Y2), (_S, _PZ2)),
        _product(2 * SQRT5, Y, (_C, _PX2), (_C, _Y2P), (_S, _Z2)),
        _product(-2 * PHI_INV, Z, (_S, _SIN_Y)),
        _product(-(7 + SQRT5), Z, (_C, _X2), (_S, _PY2), (_C, _Z2P)),
        _product(-2 * PHI_INV**2, Z, (_C, _PX2), (_S, _Y2P), (_C, _Z2)),
        _product(-2 * SQRT5, Z, (_C, _X2P), (_S, _Y2), (_C, _PZ2)),
    )


def closed_v() -> VectorField:
    return cyclic_field(v_x())


def closed_w() -> VectorField:
    return cyclic_field(w_x())


def closed_v0() -> VectorField:
    return cyclic_field(v0_x())


# -- polynomial heads -------------------------------------------------------


def _s5(a, b) -> GoldenNumber:
    return GoldenNumber(a, b)


@lru_cache(maxsize=None)
def varpi() -> Polynomial:
    return poly(
        3,
        [
            (_s5(5, -1), (0, 1, 5)),
            (_s5(5, 1), (0, 5, 1)),
            (-20, (0, 3, 3)),
            (_s5(10, 10), (2, 1, 3)),
            (_s5(10, -10), (2, 3, 1)),
            (-10, (4, 1, 1)),
        ],
    )


@lru_cache(maxsize=None)
def lam() -> Polynomial:
    return poly(
        3,
        [
            (_s5(35, -5), (1, 4, 0)),
            (-_s5(35, 5), (1, 0, 4)),
            (_s5(0, 60), (1, 2, 2)),
            (-_s5(70, 10), (3, 2, 0)),
            (_s5(70, -10), (3, 0, 2)),
            (_s5(0, 2), (5, 0, 0)),
        ],
    )


@lru_cache(maxsize=None)
def varpi0() -> Polynomial:
    return poly(
        3,
        [
            (-18, (8, 1, 1)),
            (_s5(84, 84), (6, 3, 1)),
            (_s5(84, -84), (6, 1, 3)),
            (-_s5(126, 126), (4, 5, 1)),
            (-_s5(126, -126), (4, 1, 5)),
            (_s5(36, 108), (2, 7, 1)),
            (_s5(36, -108), (2, 1, 7)),
            (_s5(0, -504), (2, 5, 3)),
            (_s5(0, 504), (2, 3, 5)),
            (_s5(9, -5), (0, 9, 1)),
            (_s5(9, 5), (0, 1, 9)),
            (-_s5(120, -24), (0, 7, 3)),
            (-_s5(120, 24), (0, 3, 7)),
            (252, (0, 5, 5)),
        ],
    )


def cyclic_polys(p: Polynomial) -> list[Polynomial]:
    return [p, p.permute([1, 2, 0]), p.permute([2, 0, 1])]


def field_m() -> VectorField:
    return VectorField(cyclic_polys(varpi()))


def field_n() -> VectorField:
    return VectorField(cyclic_polys(lam()))


def field_p() -> VectorField:
    return VectorField(cyclic_polys(varpi0()))


M_SCALE = 768
P_SCALE = 23224320

# -- first integrals of M -----------------------------------------------------


def sphere_integral() -> Polynomial:
    return poly(3, [(1, (2, 0, 0)), (1, (0, 2, 0)), (1, (0, 0, 2))])


def plane_integral() -> Polynomial:
    """``(φ²x²-y²)(φ²y²-z²)(φ²z²-x²)``."""
    p2 = PHI**2
    f1 = poly(3, [(p2, (2, 0, 0)), (-1, (0, 2, 0))])
    f2 = poly(3, [(p2, (0, 2, 0)), (-1, (0, 0, 2))])
    f3 = poly(3, [(p2, (0, 0, 2)), (-1, (2, 0, 0))])
    return f1 * f2 * f3


# -- planar hexagonal field and ABC flow ---------------------------------------


def field_d() -> VectorField:
    """The planar field with 6-fold dihedral symmetry (coefficients in Q(√3))."""
    r3h = SQRT3 / 2
    tx = _sum(
        _product(-1, None, (_C, (0, 1))),
        _product(SQRT3, None, (_S, (HALF, 0)), (_S, (0, r3h))),
        _product(1, None, (_C, (r3h, 0)), (_C, (0, HALF))),
    )
    ty = _sum(
        _product(-1, None, (_C, (1, 0))),
        _product(SQRT3, None, (_S, (0, HALF)), (_S, (r3h, 0))),
        _product(1, None, (_C, (0, r3h)), (_C, (HALF, 0))),
    )
    return VectorField([tx, ty])


def dihedral_generators() -> tuple[Matrix, Matrix]:
    swap = Matrix([[0, 1], [1, 0]])
    rot = Matrix([[-HALF, -SQRT3 / 2], [SQRT3 / 2, -HALF]])
    return swap, rot


def field_d_head() -> list[Polynomial]:
    """``(3/8)(2xy - x² + y², 2xy + x² - y²)``."""
    k = gn("3/8")
    return [
        poly(2, [(2 * k, (1, 1)), (-k, (2, 0)), (k, (0, 2))]),
        poly(2, [(2 * k, (1, 1)), (k, (2, 0)), (-k, (0, 2))]),
    ]


def abc_field(a=1, b=1, c=1) -> VectorField:
    """``(A sin z + C cos y, B sin x + A cos z, C sin y + B cos x)``."""
    a, b, c = gn(a), gn(b), gn(c)
    ex, ey, ez = (1, 0, 0), (0, 1, 0), (0, 0, 1)

    def t(coef, kind, form):
        return TrigExpr.term(kind, LinearForm(form), Polynomial.constant(3, coef))

    return VectorField(
        [
            t(a, SIN, ez) + t(c, COS, ey),
            t(b, SIN, ex) + t(a, COS, ez),
            t(c, SIN, ey) + t(b, COS, ex),
        ]
    )
