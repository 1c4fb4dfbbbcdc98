"""Rational-function vector fields over Q and their curl identities.

No gcd reduction is attempted: equality is tested by cross-multiplication,
which is all the identities below require.
"""

from __future__ import annotations

from typing import Sequence

from .exactnum import gn
from .linalg import Matrix, MatrixGroup
from .poly import Polynomial, poly


class IrrationalDataError(ValueError):
    """Raised when data that must be rational carries a √5 part."""


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        den = Polynomial.constant(num.n, 1) if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("denominator is identically zero")
        if num.n != den.n:
            raise ValueError("numerator and denominator live in different rings")
        self.num, self.den = num, den

    @property
    def n(self) -> int:
        return self.num.n

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_rational(self) -> bool:
        return self.num.is_rational() and self.den.is_rational()

    def equals(self, other: RationalFunction) -> bool:
        return (self.num * other.den) == (other.num * self.den)

    def __add__(self, other: RationalFunction) -> RationalFunction:
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: RationalFunction) -> RationalFunction:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.num * other.num, self.den * other.den)
        return RationalFunction(self.num.scale(other), self.den)

    __rmul__ = __mul__

    def diff(self, axis: int) -> RationalFunction:
        """Quotient rule, with the shortcut ``(u/d)' = u'/d`` for constant ``d``."""
        if self.den.degree() == 0:
            return RationalFunction(self.num.diff(axis), self.den)
        top = self.num.diff(axis) * self.den - self.num * self.den.diff(axis)
        return RationalFunction(top, self.den * self.den)

    def linear_substitute(self, rows) -> RationalFunction:
        return RationalFunction(self.num.linear_substitute(rows), self.den.linear_substitute(rows))

    def permute(self, perm: Sequence[int]) -> RationalFunction:
        return RationalFunction(self.num.permute(perm), self.den.permute(perm))

    def to_json(self) -> dict:
        return {"numerator": self.num.to_json(), "denominator": self.den.to_json()}

    @classmethod
    def from_json(cls, n: int, data: dict) -> RationalFunction:
        return cls(Polynomial.from_json(n, data["numerator"]), Polynomial.from_json(n, data["denominator"]))

    def __repr__(self) -> str:
        return f"RationalFunction(({self.num}) / ({self.den}))"


class RationalVectorField:
    __slots__ = ("components",)

    def __init__(self, components: Sequence[RationalFunction]):
        if len(components) != 3:
            raise ValueError("rational vector fields here are 3-dimensional")
        self.components = tuple(components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i: int) -> RationalFunction:
        return self.components[i]

    def __add__(self, other: RationalVectorField) -> RationalVectorField:
        return RationalVectorField([a + b for a, b in zip(self, other)])

    def scale(self, c) -> RationalVectorField:
        return RationalVectorField([a * c for a in self])

    def multiply(self, f: RationalFunction) -> RationalVectorField:
        return RationalVectorField([f * a for a in self])

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self)

    def to_json(self) -> list:
        return [c.to_json() for c in self]


def rf_curl(v: RationalVectorField) -> RationalVectorField:
    fx, fy, fz = v.components
    return RationalVectorField(
        [fz.diff(1) - fy.diff(2), fx.diff(2) - fz.diff(0), fy.diff(0) - fx.diff(1)]
    )


def rf_equal(v1: RationalVectorField, v2: RationalVectorField) -> bool:
    """Componentwise cross-multiplication equality of rational data."""
    if not (v1.is_rational() and v2.is_rational()):
        raise IrrationalDataError("rf_equal compares fields with rational coefficients only")
    return all(a.equals(b) for a, b in zip(v1, v2))


def rf_conjugate(v: RationalVectorField, g: Matrix) -> RationalVectorField:
    """``x ↦ g⁻¹·v(g·x)``."""
    g_inv = g.inverse()
    moved = [c.linear_substitute(g.rows) for c in v]
    comps = []
    for i in range(3):
        total = None
        for j in range(3):
            coef = g_inv[i, j]
            if coef:
                term = moved[j] * coef
                total = term if total is None else total + term
        comps.append(total if total is not None else RationalFunction(Polynomial.zero(3)))
    return RationalVectorField(comps)


def rf_group_average(
    v: RationalVectorField, group: MatrixGroup | Sequence[Matrix], scale=1
) -> RationalVectorField:
    """``scale · Σ_g g⁻¹∘v∘g``; the result must have rational coefficients."""
    total = None
    for g in group:
        term = rf_conjugate(v, g)
        total = term if total is None else total + term
    total = total.scale(gn(scale))
    if not total.is_rational():
        raise IrrationalDataError("group average has irrational coefficients")
    return total


def rf_cross(v1: RationalVectorField, v2: RationalVectorField) -> RationalVectorField:
    a1, a2, a3 = v1.components
    b1, b2, b3 = v2.components
    return RationalVectorField([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])


def norm_squared(v: RationalVectorField) -> RationalFunction:
    a, b, c = v.components
    return a * a + b * b + c * c


# -- the concrete fields ------------------------------------------------------


def one_plus_r2() -> Polynomial:
    return poly(3, [(1, (0, 0, 0)), (1, (2, 0, 0)), (1, (0, 2, 0)), (1, (0, 0, 2))])


def curl_multiplier() -> RationalFunction:
    """``4 / (1 + x² + y² + z²)``."""
    return RationalFunction(Polynomial.constant(3, 4), one_plus_r2())


def sasakian_field() -> RationalVectorField:
    """The stereographic image of the standard contact field on the 3-sphere."""
    den = one_plus_r2() * one_plus_r2()
    return RationalVectorField(
        [
            RationalFunction(poly(3, [(8, (1, 0, 1)), (-8, (0, 1, 0))]), den),
            RationalFunction(poly(3, [(8, (1, 0, 0)), (8, (0, 1, 1))]), den),
            RationalFunction(
                poly(3, [(4, (0, 0, 0)), (4, (0, 0, 2)), (-4, (2, 0, 0)), (-4, (0, 2, 0))]), den
            ),
        ]
    )


def u_numerator() -> Polynomial:
    """``2xy + 2xz - 2y + 2z + 1 + x² - y² - z²``."""
    return poly(
        3,
        [
            (2, (1, 1, 0)),
            (2, (1, 0, 1)),
            (-2, (0, 1, 0)),
            (2, (0, 0, 1)),
            (1, (0, 0, 0)),
            (1, (2, 0, 0)),
            (-1, (0, 2, 0)),
            (-1, (0, 0, 2)),
        ],
    )


def averaged_field() -> RationalVectorField:
    """``(U(x,y,z), U(y,z,x), U(z,x,y))`` entered from its closed form."""
    den = one_plus_r2() * one_plus_r2()
    u = u_numerator()
    return RationalVectorField(
        [
            RationalFunction(u, den),
            RationalFunction(u.permute([1, 2, 0]), den),
            RationalFunction(u.permute([2, 0, 1]), den),
        ]
    )


def is_beltrami(v: RationalVectorField) -> bool:
    """``v × curl v = 0`` as cross-multiplied polynomial identities."""
    return rf_cross(v, rf_curl(v)).is_zero()


def speed_identity(v: RationalVectorField, k) -> bool:
    """``|v|² · (1 + r²)² = k`` exactly."""
    n2 = norm_squared(v)
    rhs = RationalFunction(Polynomial.constant(3, gn(k)), one_plus_r2() * one_plus_r2())
    return n2.equals(rhs)
