"""Canonical trigonometric-polynomial expressions and vector calculus on them.

An expression is a finite sum ``Σ P_k(x)·f_k(ℓ_k·x)`` with ``f_k`` one of
``1``, ``sin``, ``cos`` and ``ℓ_k`` a linear form with quadratic-field
coefficients.  Arguments are stored sign-normalised (first nonzero
coefficient positive), so ``sin(-ℓ)`` becomes ``-sin(ℓ)`` and ``cos(-ℓ)``
becomes ``cos(ℓ)``.  Distinct normalised frequencies give linearly
independent characters over the polynomial ring, hence an expression is zero
iff every stored polynomial is zero and equality is dictionary equality.
"""

from __future__ import annotations

import os
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from .exactnum import ONE, ZERO, GoldenNumber, gn
from .linalg import Matrix
from .poly import Polynomial, var_names

ONE_KIND, SIN, COS = "one", "sin", "cos"
_KIND_ORDER = {ONE_KIND: 0, SIN: 1, COS: 2}

TAYLOR_CAP = int(os.environ.get("ICOBELTRAMI_TAYLOR_CAP", "12"))


class LinearForm:
    """Linear form ``x ↦ Σ c_i x_i``; hashable by exact coefficients."""

    __slots__ = ("coeffs", "_key")

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(gn(c) for c in coeffs)
        self._key = tuple(c.key() for c in self.coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def sort_key(self) -> tuple:
        return self._key

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __neg__(self) -> LinearForm:
        return LinearForm(-c for c in self.coeffs)

    def __add__(self, other: LinearForm) -> LinearForm:
        return LinearForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: LinearForm) -> LinearForm:
        return LinearForm(a - b for a, b in zip(self.coeffs, other.coeffs))

    def scale(self, c) -> LinearForm:
        c = gn(c)
        return LinearForm(a * c for a in self.coeffs)

    def is_canonical(self) -> bool:
        lead = next((c for c in self.coeffs if c), None)
        return lead is None or lead.sign() > 0

    def canonical(self) -> tuple[LinearForm, bool]:
        """Return ``(form, flipped)`` with the form's leading coefficient positive."""
        if self.is_canonical():
            return self, False
        return -self, True

    def pullback(self, matrix: Sequence[Sequence[GoldenNumber]]) -> LinearForm:
        """The form ``y ↦ ℓ(S·y)``, i.e. coefficients ``Sᵀ·c``."""
        m = len(matrix[0])
        out = []
        for j in range(m):
            total = ZERO
            for i, c in enumerate(self.coeffs):
                if c:
                    total = total + c * matrix[i][j]
            out.append(total)
        return LinearForm(out)

    def as_polynomial(self) -> Polynomial:
        return Polynomial.linear(self.coeffs)

    def evaluate(self, point: Sequence) -> GoldenNumber:
        total = ZERO
        for c, p in zip(self.coeffs, point):
            total = total + c * gn(p)
        return total

    def __repr__(self) -> str:
        return f"LinearForm({', '.join(map(str, self.coeffs))})"

    def __str__(self) -> str:
        names = var_names(self.n)
        parts = []
        for c, v in zip(self.coeffs, names):
            if c:
                parts.append(v if c == ONE else f"({c})*{v}")
        return " + ".join(parts) if parts else "0"


def axis_form(n: int, i: int) -> LinearForm:
    return LinearForm(ONE if j == i else ZERO for j in range(n))


Key = tuple  # (kind, LinearForm | None)


def _add_term(terms: dict, kind: str, form: LinearForm | None, p: Polynomial) -> None:
    """Accumulate ``p·kind(form)`` into ``terms`` in canonical form."""
    if p.is_zero():
        return
    if kind != ONE_KIND:
        if form.is_zero():
            if kind == SIN:
                return
            kind, form = ONE_KIND, None
        else:
            form, flipped = form.canonical()
            if flipped and kind == SIN:
                p = -p
    key = (kind, form)
    prev = terms.get(key)
    if prev is None:
        terms[key] = p
        return
    total = prev + p
    if total.is_zero():
        del terms[key]
    else:
        terms[key] = total


class TrigExpr:
    """Canonical sum of ``polynomial × {1, sin, cos}(linear form)`` terms."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Key, Polynomial] | None = None):
        self.n = n
        out: dict = {}
        for (kind, form), p in (terms or {}).items():
            if p.n != n or (form is not None and form.n != n):
                raise ValueError("dimension mismatch inside TrigExpr")
            _add_term(out, kind, form, p)
        self.terms = out

    @classmethod
    def _wrap(cls, n: int, terms: dict) -> TrigExpr:
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> TrigExpr:
        return cls._wrap(n, {})

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> TrigExpr:
        return cls._wrap(p.n, {(ONE_KIND, None): p} if p else {})

    @classmethod
    def constant(cls, n: int, c) -> TrigExpr:
        return cls.from_polynomial(Polynomial.constant(n, c))

    @classmethod
    def term(cls, kind: str, form, p: Polynomial | None = None) -> TrigExpr:
        """Single term ``p·kind(form)``; ``p`` defaults to 1."""
        form = form if isinstance(form, LinearForm) else LinearForm(form)
        n = form.n
        p = Polynomial.constant(n, 1) if p is None else p
        out: dict = {}
        _add_term(out, kind, form, p)
        return cls._wrap(n, out)

    @classmethod
    def sin(cls, form, p: Polynomial | None = None) -> TrigExpr:
        return cls.term(SIN, form, p)

    @classmethod
    def cos(cls, form, p: Polynomial | None = None) -> TrigExpr:
        return cls.term(COS, form, p)

    @classmethod
    def variable(cls, n: int, i: int) -> TrigExpr:
        return cls.from_polynomial(Polynomial.variable(n, i))

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, TrigExpr):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, GoldenNumber)):
            return self == TrigExpr.constant(self.n, other)
        return NotImplemented

    __hash__ = None

    def is_polynomial(self) -> bool:
        return all(kind == ONE_KIND for kind, _ in self.terms)

    def polynomial_part(self) -> Polynomial:
        return self.terms.get((ONE_KIND, None), Polynomial.zero(self.n))

    def coefficients(self) -> Iterable[tuple[Key, tuple, GoldenNumber]]:
        """All ``(key, monomial, coefficient)`` triples; zero iff this is empty."""
        for key, p in self.terms.items():
            for e, c in p.terms.items():
                yield key, e, c

    def sorted_items(self) -> list[tuple[Key, Polynomial]]:
        def sort_key(item):
            (kind, form), _ = item
            return (_KIND_ORDER[kind], form.sort_key() if form is not None else ())

        return sorted(self.terms.items(), key=sort_key)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: TrigExpr) -> None:
        if self.n != other.n:
            raise ValueError(f"cannot mix {self.n}- and {other.n}-variable expressions")

    def __add__(self, other):
        if not isinstance(other, TrigExpr):
            other = TrigExpr.constant(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for (kind, form), p in other.terms.items():
            _add_term(out, kind, form, p)
        return TrigExpr._wrap(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> TrigExpr:
        return TrigExpr._wrap(self.n, {k: -p for k, p in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TrigExpr):
            other = TrigExpr.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> TrigExpr:
        c = gn(c)
        if not c:
            return TrigExpr.zero(self.n)
        return TrigExpr._wrap(self.n, {k: p.scale(c) for k, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TrigExpr):
            return expr_mul(self, other)
        if isinstance(other, Polynomial):
            return expr_mul(self, TrigExpr.from_polynomial(other))
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Polynomial):
            return expr_mul(TrigExpr.from_polynomial(other), self)
        return self.scale(other)

    def __truediv__(self, c) -> TrigExpr:
        return self.scale(gn(c).inverse())

    # -- transformations -------------------------------------------------

    def map_terms(self, fn: Callable[[str, LinearForm | None, Polynomial], tuple]) -> TrigExpr:
        """Rebuild from ``fn(kind, form, poly) -> (kind, form, poly)``, re-canonicalising."""
        n = None
        out: dict = {}
        for (kind, form), p in self.terms.items():
            k2, f2, p2 = fn(kind, form, p)
            n = p2.n
            _add_term(out, k2, f2, p2)
        return TrigExpr._wrap(self.n if n is None else n, out)

    def linear_substitute(self, matrix: Sequence[Sequence]) -> TrigExpr:
        """``e(S·y)`` where ``x_i = Σ_j S[i][j]·y_j``; the result lives in ``len(S[0])`` variables."""
        rows = [[gn(x) for x in r] for r in (matrix.rows if isinstance(matrix, Matrix) else matrix)]
        if len(rows) != self.n:
            raise ValueError("substitution matrix must have one row per variable")
        m = len(rows[0])
        images = [Polynomial.linear(r) for r in rows]
        out: dict = {}
        for (kind, form), p in self.terms.items():
            p2 = p.substitute(images) if p.degree() > 0 else _recast_constant(p, m)
            f2 = form.pullback(rows) if form is not None else None
            _add_term(out, kind, f2, p2)
        return TrigExpr._wrap(m, out)

    def permute(self, perm: Sequence[int]) -> TrigExpr:
        """Replace variable ``i`` by variable ``perm[i]``."""
        rows = [[ONE if perm[i] == j else ZERO for j in range(self.n)] for i in range(self.n)]
        return self.linear_substitute(rows)

    def tau(self) -> TrigExpr:
        return self.map_terms(
            lambda kind, form, p: (
                kind,
                LinearForm(c.tau() for c in form.coeffs) if form is not None else None,
                p.tau(),
            )
        )

    # -- presentation ----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (kind, form), p in self.sorted_items():
            if kind == ONE_KIND:
                parts.append(f"[{p}]")
            else:
                parts.append(f"[{p}]*{kind}({form})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TrigExpr({self.n}, {self})"

    def to_json(self) -> list[dict]:
        return [
            {
                "kind": kind,
                "arg": [str(c) for c in form.coeffs] if form is not None else [],
                "polynomial": p.to_json(),
            }
            for (kind, form), p in self.sorted_items()
        ]

    @classmethod
    def from_json(cls, n: int, data: Sequence[Mapping]) -> TrigExpr:
        out = TrigExpr.zero(n)
        for t in data:
            p = Polynomial.from_json(n, t["polynomial"])
            if t["kind"] == ONE_KIND:
                out = out + TrigExpr.from_polynomial(p)
            else:
                out = out + TrigExpr.term(t["kind"], LinearForm(gn(c) for c in t["arg"]), p)
        return out


def _recast_constant(p: Polynomial, m: int) -> Polynomial:
    c = p.coefficient((0,) * p.n)
    return Polynomial.constant(m, c)


# -- products -------------------------------------------------------------

_HALF = gn("1/2")


def expr_add(e1: TrigExpr, e2: TrigExpr) -> TrigExpr:
    return e1 + e2


def expr_scale(e: TrigExpr, c) -> TrigExpr:
    return e.scale(c)


def expr_mul(e1: TrigExpr, e2: TrigExpr) -> TrigExpr:
    """Product, rewritten back to canonical form by product-to-sum identities."""
    e1._check(e2)
    out: dict = {}
    for (k1, f1), p1 in e1.terms.items():
        for (k2, f2), p2 in e2.terms.items():
            p = p1 * p2
            if p.is_zero():
                continue
            if k1 == ONE_KIND:
                _add_term(out, k2, f2, p)
            elif k2 == ONE_KIND:
                _add_term(out, k1, f1, p)
            else:
                h = p.scale(_HALF)
                diff, total = f1 - f2, f1 + f2
                if k1 == SIN and k2 == SIN:
                    _add_term(out, COS, diff, h)
                    _add_term(out, COS, total, -h)
                elif k1 == COS and k2 == COS:
                    _add_term(out, COS, diff, h)
                    _add_term(out, COS, total, h)
                elif k1 == SIN:  # sin u cos v
                    _add_term(out, SIN, total, h)
                    _add_term(out, SIN, diff, h)
                else:  # cos u sin v
                    _add_term(out, SIN, total, h)
                    _add_term(out, SIN, -diff, h)
    return TrigExpr._wrap(e1.n, out)


# -- calculus -------------------------------------------------------------


def partial_derivative(e: TrigExpr, axis: int) -> TrigExpr:
    if not 0 <= axis < e.n:
        raise ValueError(f"axis {axis} out of range for {e.n} variables")
    out: dict = {}
    for (kind, form), p in e.terms.items():
        _add_term(out, kind, form, p.diff(axis))
        if kind == ONE_KIND:
            continue
        c = form.coeffs[axis]
        if not c:
            continue
        if kind == SIN:
            _add_term(out, COS, form, p.scale(c))
        else:
            _add_term(out, SIN, form, p.scale(-c))
    return TrigExpr._wrap(e.n, out)


def gradient(e: TrigExpr) -> VectorField:
    return VectorField([partial_derivative(e, i) for i in range(e.n)])


def laplacian(e: TrigExpr) -> TrigExpr:
    total = TrigExpr.zero(e.n)
    for i in range(e.n):
        total = total + partial_derivative(partial_derivative(e, i), i)
    return total


def helmholtz_residual(e: TrigExpr) -> TrigExpr:
    """``∇²e + e``; zero exactly when ``e`` solves ``∇²Ψ = -Ψ``."""
    return laplacian(e) + e


# -- vector fields --------------------------------------------------------


class VectorField:
    """Tuple of ``n`` :class:`TrigExpr` components in ``n`` variables."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence):
        comps = tuple(
            c if isinstance(c, TrigExpr) else TrigExpr.from_polynomial(c) for c in components
        )
        dims = {c.n for c in comps}
        if len(dims) != 1:
            raise ValueError("components live in different dimensions")
        self.components = comps

    @classmethod
    def zero(cls, n: int) -> VectorField:
        return cls([TrigExpr.zero(n)] * n)

    @property
    def n(self) -> int:
        return self.components[0].n

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i: int) -> TrigExpr:
        return self.components[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, VectorField) and self.components == other.components

    __hash__ = None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: VectorField) -> VectorField:
        return VectorField([a + b for a, b in zip(self, other)])

    def __sub__(self, other: VectorField) -> VectorField:
        return VectorField([a - b for a, b in zip(self, other)])

    def __neg__(self) -> VectorField:
        return VectorField([-a for a in self])

    def scale(self, c) -> VectorField:
        return VectorField([a.scale(c) for a in self])

    def __mul__(self, c) -> VectorField:
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, c) -> VectorField:
        return self.scale(gn(c).inverse())

    def map(self, fn: Callable[[TrigExpr], TrigExpr]) -> VectorField:
        return VectorField([fn(c) for c in self])

    def tau(self) -> VectorField:
        return self.map(lambda c: c.tau())

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self)

    def polynomials(self) -> list[Polynomial]:
        return [c.polynomial_part() for c in self]

    def to_json(self) -> list:
        return [c.to_json() for c in self]

    def __str__(self) -> str:
        return "(" + ",\n ".join(str(c) for c in self) + ")"

    def __repr__(self) -> str:
        return f"VectorField({self.n}, {self})"


def curl(v: VectorField) -> VectorField:
    if v.n != 3 or len(v) != 3:
        raise ValueError("curl is only defined for 3-dimensional fields")
    fx, fy, fz = v.components
    d = partial_derivative
    return VectorField([d(fz, 1) - d(fy, 2), d(fx, 2) - d(fz, 0), d(fy, 0) - d(fx, 1)])


def divergence(v: VectorField) -> TrigExpr:
    total = TrigExpr.zero(v.n)
    for i, c in enumerate(v):
        total = total + partial_derivative(c, i)
    return total


def vector_laplacian(v: VectorField) -> VectorField:
    return v.map(laplacian)


def conjugate(v: VectorField, g: Matrix) -> VectorField:
    """The field ``x ↦ g⁻¹·v(g·x)``."""
    n = v.n
    if g.shape != (n, n):
        raise ValueError(f"need a {n}x{n} matrix")
    g_inv = g.inverse()  # raises for singular g
    moved = [c.linear_substitute(g.rows) for c in v]
    comps = []
    for i in range(n):
        total = TrigExpr.zero(n)
        for j in range(n):
            coef = g_inv[i, j]
            if coef:
                total = total + moved[j].scale(coef)
        comps.append(total)
    return VectorField(comps)


def tau_swap(e: TrigExpr, fixed_axis: int = 0) -> TrigExpr:
    """Apply τ to every coefficient and swap the two variables other than ``fixed_axis``."""
    if e.n != 3:
        raise ValueError("tau_swap needs 3 variables")
    i, j = [k for k in range(3) if k != fixed_axis]
    perm = [0, 1, 2]
    perm[i], perm[j] = j, i
    return e.tau().permute(perm)


def cyclic_field(g: TrigExpr) -> VectorField:
    """``(g(x,y,z), g(y,z,x), g(z,x,y))``."""
    if g.n != 3:
        raise ValueError("cyclic_field needs 3 variables")
    return VectorField([g, g.permute([1, 2, 0]), g.permute([2, 0, 1])])


def directional(v: VectorField, e: TrigExpr) -> TrigExpr:
    """``v(e) = Σ v_i ∂e/∂x_i``."""
    total = TrigExpr.zero(e.n)
    for i, c in enumerate(v):
        if c:
            total = total + expr_mul(c, partial_derivative(e, i))
    return total


def lie_bracket(v1: VectorField, v2: VectorField) -> VectorField:
    """``[X, Y]_i = X(Y_i) - Y(X_i)``."""
    if v1.n != v2.n:
        raise ValueError("fields live in different dimensions")
    return VectorField([directional(v1, b) - directional(v2, a) for a, b in zip(v1, v2)])


def is_first_integral(w, v: VectorField) -> bool:
    """True iff ``Σ ∂w/∂x_i · v_i`` vanishes identically."""
    w = w if isinstance(w, TrigExpr) else TrigExpr.from_polynomial(w)
    return directional(v, w).is_zero()


def restrict_to_line(v: VectorField, direction: Sequence) -> tuple[TrigExpr, ...]:
    """Components of ``s ↦ v(s·direction)`` as one-variable expressions in ``s``."""
    d = [gn(x) for x in direction]
    if not any(d):
        raise ValueError("zero direction")
    column = [[x] for x in d]
    return tuple(c.linear_substitute(column) for c in v)


# -- Taylor expansion -----------------------------------------------------


class _PowerCache:
    def __init__(self):
        self._cache: dict = {}

    def power(self, form: LinearForm, k: int) -> Polynomial:
        table = self._cache.setdefault(form, [Polynomial.constant(form.n, 1)])
        while len(table) <= k:
            table.append(table[-1] * form.as_polynomial())
        return table[k]


def _series_coefficient(kind: str, k: int) -> GoldenNumber:
    """Coefficient of ``u^k`` in the series of ``kind(u)``."""
    if kind == SIN:
        if k % 2 == 0:
            return ZERO
        return gn((-1) ** ((k - 1) // 2)) / factorial(k)
    if k % 2:
        return ZERO
    return gn((-1) ** (k // 2)) / factorial(k)


def _check_cap(degree: int) -> None:
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree > TAYLOR_CAP:
        raise ValueError(
            f"Taylor degree {degree} exceeds the cap {TAYLOR_CAP} "
            "(set ICOBELTRAMI_TAYLOR_CAP to raise it)"
        )


def taylor_component(e: TrigExpr, degree: int, _cache: _PowerCache | None = None) -> Polynomial:
    """Homogeneous part of total degree ``degree`` of the Taylor series at 0."""
    _check_cap(degree)
    cache = _cache or _PowerCache()
    total = Polynomial.zero(e.n)
    for (kind, form), p in e.terms.items():
        for j, part in p.by_degree().items():
            k = degree - j
            if k < 0:
                continue
            if kind == ONE_KIND:
                if k == 0:
                    total = total + part
                continue
            c = _series_coefficient(kind, k)
            if c:
                total = total + (part * cache.power(form, k)).scale(c)
    return total


def taylor(e: TrigExpr, degree: int) -> Polynomial:
    """Taylor polynomial at 0 truncated after total degree ``degree``."""
    _check_cap(degree)
    cache = _PowerCache()
    total = Polynomial.zero(e.n)
    for d in range(degree + 1):
        total = total + taylor_component(e, d, cache)
    return total


def taylor_field(v: VectorField, degree: int, homogeneous: bool = True) -> list[Polynomial]:
    fn = taylor_component if homogeneous else taylor
    return [fn(c, degree) for c in v]


def polynomial_field(polys: Sequence[Polynomial]) -> VectorField:
    return VectorField([TrigExpr.from_polynomial(p) for p in polys])
