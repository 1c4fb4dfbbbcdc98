"""Sparse multivariate polynomials with quadratic-field coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .exactnum import ONE, ZERO, GoldenNumber, gn, parse_gn

Monomial = tuple  # exponent tuple, one entry per variable

_VAR_NAMES = {1: ("s",), 2: ("x", "y"), 3: ("x", "y", "z")}


def var_names(n: int) -> tuple[str, ...]:
    return _VAR_NAMES.get(n) or tuple(f"x{i}" for i in range(n))


class Polynomial:
    """Polynomial in ``n`` variables stored as ``{exponents: coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term dictionaries are equal.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, GoldenNumber] | None = None):
        self.n = n
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ValueError(f"monomial {exps} does not have {n} exponents")
                c = GoldenNumber.coerce(c)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def _wrap(cls, n: int, terms: dict) -> Polynomial:
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls._wrap(n, {})

    @classmethod
    def constant(cls, n: int, c) -> Polynomial:
        c = GoldenNumber.coerce(c)
        return cls._wrap(n, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, n: int, i: int) -> Polynomial:
        exps = [0] * n
        exps[i] = 1
        return cls._wrap(n, {tuple(exps): ONE})

    @classmethod
    def linear(cls, coeffs: Sequence) -> Polynomial:
        """Homogeneous linear polynomial ``Σ coeffs[i]·x_i``."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = GoldenNumber.coerce(c)
            if c:
                exps = [0] * n
                exps[i] = 1
                terms[tuple(exps)] = c
        return cls._wrap(n, terms)

    @classmethod
    def from_terms(cls, n: int, pairs: Iterable[tuple]) -> Polynomial:
        """Build from ``(coefficient, exponents)`` pairs, merging duplicates."""
        out: dict = {}
        for c, exps in pairs:
            _accumulate(out, tuple(exps), GoldenNumber.coerce(c))
        return cls._wrap(n, out)

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, GoldenNumber)):
            return self == Polynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def homogeneous(self, d: int) -> Polynomial:
        return Polynomial._wrap(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def truncate(self, d: int) -> Polynomial:
        return Polynomial._wrap(self.n, {e: c for e, c in self.terms.items() if sum(e) <= d})

    def by_degree(self) -> dict[int, Polynomial]:
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial._wrap(self.n, t) for d, t in parts.items()}

    def coefficient(self, exps: Sequence[int]) -> GoldenNumber:
        return self.terms.get(tuple(exps), ZERO)

    def coefficients(self) -> list[GoldenNumber]:
        return list(self.terms.values())

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _accumulate(out, e, c)
        return Polynomial._wrap(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._wrap(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = GoldenNumber.coerce(c)
        if not c:
            return Polynomial.zero(self.n)
        if c == ONE:
            return self
        return Polynomial._wrap(self.n, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        return self.mul_truncated(other, None)

    def __rmul__(self, other):
        return self.scale(other)

    def mul_truncated(self, other: Polynomial, max_degree: int | None) -> Polynomial:
        """Product keeping only monomials of total degree ``<= max_degree``."""
        out: dict = {}
        n = self.n
        if max_degree is None:
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    _accumulate(out, tuple(e1[i] + e2[i] for i in range(n)), c1 * c2)
        else:
            rhs = [(e, c, sum(e)) for e, c in other.terms.items()]
            for e1, c1 in self.terms.items():
                room = max_degree - sum(e1)
                if room < 0:
                    continue
                for e2, c2, d2 in rhs:
                    if d2 <= room:
                        _accumulate(out, tuple(e1[i] + e2[i] for i in range(n)), c1 * c2)
        return Polynomial._wrap(n, out)

    def __pow__(self, k: int) -> Polynomial:
        result = Polynomial.constant(self.n, 1)
        for _ in range(k):
            result = result * self
        return result

    # -- calculus and substitution ---------------------------------------

    def diff(self, axis: int) -> Polynomial:
        out = {}
        for e, c in self.terms.items():
            k = e[axis]
            if k:
                ne = e[:axis] + (k - 1,) + e[axis + 1 :]
                out[ne] = c * k
        return Polynomial._wrap(self.n, out)

    def gradient(self) -> list[Polynomial]:
        return [self.diff(i) for i in range(self.n)]

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Compose: replace variable ``i`` by ``images[i]`` (all in a common ring)."""
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        m = images[0].n
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(m, 1)} for _ in images]

        def power(i: int, k: int) -> Polynomial:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        out: dict = {}
        for e, c in self.terms.items():
            term = Polynomial.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for e2, c2 in term.terms.items():
                _accumulate(out, e2, c2)
        return Polynomial._wrap(m, out)

    def linear_substitute(self, matrix: Sequence[Sequence]) -> Polynomial:
        """``P(S·y)`` where ``x_i = Σ_j S[i][j]·y_j``."""
        return self.substitute([Polynomial.linear(row) for row in matrix])

    def permute(self, perm: Sequence[int]) -> Polynomial:
        """Variable ``i`` is replaced by variable ``perm[i]``."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for i, k in enumerate(e):
                ne[perm[i]] += k
            out[tuple(ne)] = c
        return Polynomial._wrap(self.n, out)

    def map_coefficients(self, fn) -> Polynomial:
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return Polynomial._wrap(self.n, out)

    def tau(self) -> Polynomial:
        return self.map_coefficients(lambda c: c.tau())

    def evaluate(self, point: Sequence) -> GoldenNumber:
        """Exact evaluation at a point of quadratic numbers."""
        pts = [GoldenNumber.coerce(p) for p in point]
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for p, k in zip(pts, e):
                if k:
                    term = term * p**k
            total = total + term
        return total

    # -- presentation ----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, GoldenNumber]]:
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def to_json(self) -> dict[str, str]:
        return {",".join(map(str, e)): str(c) for e, c in self.sorted_terms()}

    @classmethod
    def from_json(cls, n: int, data: Mapping[str, str]) -> Polynomial:
        return cls.from_terms(
            n, ((parse_gn(v), tuple(int(k) for k in key.split(","))) for key, v in data.items())
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = var_names(self.n)
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k
            )
            coef = str(c)
            if not c.is_rational() or "/" in coef:
                coef = f"({coef})"
            parts.append(f"{coef}*{mono}" if mono else coef)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {self})"


def _accumulate(out: dict, e: Monomial, c: GoldenNumber) -> None:
    prev = out.get(e)
    if prev is None:
        if c:
            out[e] = c
        return
    s = prev + c
    if s:
        out[e] = s
    else:
        del out[e]


def poly(n: int, pairs: Iterable[tuple]) -> Polynomial:
    """Convenience: ``poly(3, [(coef, (i, j, k)), ...])`` with string coefficients allowed."""
    return Polynomial.from_terms(n, ((gn(c), e) for c, e in pairs))
