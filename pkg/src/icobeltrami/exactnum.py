"""Exact arithmetic in real quadratic fields, chiefly Q(√5).

A :class:`GoldenNumber` is stored as three integers ``(a, b, c)`` meaning
``(a + b·√d) / c`` with ``c > 0`` and ``gcd(a, b, c) = 1``, so the
representation is unique and equality is tuple equality.  The radicand ``d``
defaults to 5; the only other radicand used in the package is 3 (for the
planar hexagonal field).  Rationals are radicand-agnostic and combine freely
with either field.
"""

from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from numbers import Rational

__all__ = [
    "GoldenNumber",
    "PHI",
    "PHI_INV",
    "SQRT5",
    "ONE",
    "ZERO",
    "gn",
    "gn_arith",
    "gn_tau",
    "gn_sign",
    "parse_gn",
]

_RATIONAL_RADICAND = 0
_DECIMAL_DIGITS = 40


def _canon(a: int, b: int, c: int) -> tuple[int, int, int]:
    if c < 0:
        a, b, c = -a, -b, -c
    g = gcd(gcd(a, b), c)
    if g > 1:
        a, b, c = a // g, b // g, c // g
    return a, b, c


@total_ordering
class GoldenNumber:
    """Element ``r + s·√d`` of Q(√d) with rational ``r`` and ``s``."""

    __slots__ = ("_a", "_b", "_c", "_d", "_hash")

    def __init__(self, r=0, s=0, d: int = 5):
        r = Fraction(r)
        s = Fraction(s)
        if d < 2 or isqrt(d) ** 2 == d:
            raise ValueError(f"radicand must be a non-square integer > 1, got {d}")
        c = r.denominator * s.denominator // gcd(r.denominator, s.denominator)
        a = r.numerator * (c // r.denominator)
        b = s.numerator * (c // s.denominator)
        self._set(*_canon(a, b, c), d)

    def _set(self, a: int, b: int, c: int, d: int) -> None:
        self._a, self._b, self._c = a, b, c
        self._d = d if b else _RATIONAL_RADICAND
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, c: int, d: int) -> GoldenNumber:
        obj = object.__new__(cls)
        obj._set(*_canon(a, b, c), d)
        return obj

    @classmethod
    def coerce(cls, x) -> GoldenNumber:
        if isinstance(x, GoldenNumber):
            return x
        if isinstance(x, (int, Rational)):
            f = Fraction(x)
            return cls._raw(f.numerator, 0, f.denominator, _RATIONAL_RADICAND)
        raise TypeError(f"cannot convert {type(x).__name__} to GoldenNumber")

    # -- accessors -------------------------------------------------------

    @property
    def r(self) -> Fraction:
        return Fraction(self._a, self._c)

    @property
    def s(self) -> Fraction:
        return Fraction(self._b, self._c)

    @property
    def radicand(self) -> int:
        """The ``d`` of Q(√d); 5 for rationals (which lie in every field)."""
        return self._d or 5

    def key(self) -> tuple[int, int, int, int]:
        """Hashable canonical key, also usable for deterministic sorting."""
        return (self._a, self._b, self._c, self._d)

    def is_rational(self) -> bool:
        return self._b == 0

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------

    def _common_d(self, other: GoldenNumber) -> int:
        if self._d and other._d and self._d != other._d:
            raise ValueError(f"cannot mix Q(√{self._d}) and Q(√{other._d})")
        return self._d or other._d

    def __add__(self, other):
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._common_d(other)
        c1, c2 = self._c, other._c
        if c1 == c2:
            return GoldenNumber._raw(self._a + other._a, self._b + other._b, c1, d)
        return GoldenNumber._raw(
            self._a * c2 + other._a * c1, self._b * c2 + other._b * c1, c1 * c2, d
        )

    __radd__ = __add__

    def __neg__(self) -> GoldenNumber:
        obj = object.__new__(GoldenNumber)
        obj._set(-self._a, -self._b, self._c, self._d)
        return obj

    def __pos__(self) -> GoldenNumber:
        return self

    def __sub__(self, other):
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return GoldenNumber.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return GoldenNumber._raw(self._a * other, self._b * other, self._c, self._d)
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._common_d(other)
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        if b1 == 0 and b2 == 0:
            return GoldenNumber._raw(a1 * a2, 0, self._c * other._c, 0)
        return GoldenNumber._raw(
            a1 * a2 + d * b1 * b2, a1 * b2 + a2 * b1, self._c * other._c, d
        )

    __rmul__ = __mul__

    def inverse(self) -> GoldenNumber:
        if self.is_zero():
            raise ZeroDivisionError("GoldenNumber division by zero")
        a, b, c, d = self._a, self._b, self._c, self._d
        # c / (a + b√d) = c(a - b√d) / (a² - d b²)
        norm = a * a - (d * b * b if b else 0)
        return GoldenNumber._raw(c * a, -c * b, norm, d)

    def __truediv__(self, other):
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GoldenNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> GoldenNumber:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def tau(self) -> GoldenNumber:
        """Galois conjugate ``√d ↦ -√d``."""
        obj = object.__new__(GoldenNumber)
        obj._set(self._a, -self._b, self._c, self._d)
        return obj

    def sign(self) -> int:
        """Exact sign of the real embedding with √d > 0."""
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: the term with the larger square wins
        lhs, rhs = a * a, self._d * b * b
        if lhs == rhs:  # impossible for non-square d, kept for safety
            return 0
        dominant = a if lhs > rhs else b
        return 1 if dominant > 0 else -1

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GoldenNumber):
            return (self._a, self._b, self._c) == (other._a, other._b, other._c) and (
                self._b == 0 or self._d == other._d
            )
        if isinstance(other, (int, Rational)):
            return self._b == 0 and Fraction(self._a, self._c) == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        if self._hash is None:
            if self._b == 0:
                self._hash = hash(Fraction(self._a, self._c))
            else:
                self._hash = hash((self._a, self._b, self._c, self._d))
        return self._hash

    # -- conversion ------------------------------------------------------

    def to_decimal(self, digits: int = _DECIMAL_DIGITS) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 5
            value = Decimal(self._a)
            if self._b:
                value += Decimal(self._b) * Decimal(self._d).sqrt()
            return value / Decimal(self._c)

    def __float__(self) -> float:
        if self._b == 0:
            return self._a / self._c
        return float(self.to_decimal())

    def __repr__(self) -> str:
        return f"GoldenNumber({self.r!s}, {self.s!s}, d={self.radicand})"

    def __str__(self) -> str:
        r, s = self.r, self.s
        if s == 0:
            return str(r)
        irr = f"({s})√{self._d}"
        if r == 0:
            return irr
        return f"{r} + {irr}"


_RAT = r"[+-]?\d+(?:/\d+)?"
_IRR_RE = re.compile(rf"\((?P<s>{_RAT})\)\s*√(?P<d>\d+)$")
_RAT_RE = re.compile(rf"{_RAT}$")


def parse_gn(text: str) -> GoldenNumber:
    """Parse the textual form produced by ``str``: ``"p/q + (r/s)√5"``."""
    body = text.strip()
    r, irr = Fraction(0), None
    m = _IRR_RE.search(body)
    if m is not None:
        irr = m
        body = body[: m.start()].rstrip()
        if body.endswith("+"):
            body = body[:-1].rstrip()
            if not body:
                raise ValueError(f"not a quadratic number: {text!r}")
    if body:
        if not _RAT_RE.match(body):
            raise ValueError(f"not a quadratic number: {text!r}")
        r = Fraction(body)
    elif irr is None:
        raise ValueError(f"not a quadratic number: {text!r}")
    if irr is None:
        return GoldenNumber(r)
    return GoldenNumber(r, Fraction(irr.group("s")), int(irr.group("d")))


def gn(x, s=0, d: int = 5) -> GoldenNumber:
    """Shorthand constructor ``x + s·√d``; ``x`` and ``s`` may be strings.

    A string ``x`` carrying its own radical (``"1 + (2)√5"``) is parsed whole.
    """
    if isinstance(x, str) and "√" in x:
        if s:
            raise ValueError("give the radical part either in x or in s, not both")
        return parse_gn(x)
    x = Fraction(x) if isinstance(x, str) else x
    s = Fraction(s) if isinstance(s, str) else s
    if isinstance(x, GoldenNumber) and not s:
        return x
    return GoldenNumber(x, s, d)


def gn_arith(a: GoldenNumber, b: GoldenNumber, kind: str) -> GoldenNumber:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def gn_tau(a: GoldenNumber) -> GoldenNumber:
    return a.tau()


def gn_sign(a: GoldenNumber) -> int:
    return a.sign()


ZERO = GoldenNumber(0)
ONE = GoldenNumber(1)
SQRT5 = GoldenNumber(0, 1)
PHI = GoldenNumber(Fraction(1, 2), Fraction(1, 2))
PHI_INV = PHI - 1
