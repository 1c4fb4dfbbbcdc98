"""Registry of the named fields together with the predicates each must satisfy.

Every trigonometric entry is built from the ansatz (or from another entry by
an exact operation) and compared with its independently typed closed form.
Fields are built lazily and memoised, so asking for one entry never pays for
the others.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import fields as F
from . import ratfunc as R
from .construct import I_PARAMS, Y_PARAMS, ansatz_field
from .exactnum import PHI, gn
from .linalg import ALPHA, BETA, GAMMA, MINUS_I, klein_group
from .trigexpr import (
    VectorField,
    conjugate,
    curl,
    divergence,
    is_first_integral,
    restrict_to_line,
    taylor_component,
    tau_swap,
    vector_laplacian,
)


class CatalogError(KeyError):
    """Unknown entry name."""


class CatalogVerificationError(AssertionError):
    def __init__(self, entry: str, check: str):
        super().__init__(f"catalog entry {entry!r} violates {check!r}")
        self.entry, self.check = entry, check


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    predicate: Callable[[], bool]


@dataclass(frozen=True)
class CheckResult:
    entry: str
    name: str
    anchor: str
    passed: bool

    def line(self) -> str:
        return f"{self.name}: {'pass' if self.passed else 'FAIL'}"

    def to_json(self) -> dict:
        return {"entry": self.entry, "check": self.name, "anchor": self.anchor, "passed": self.passed}


@dataclass
class CatalogEntry:
    name: str
    description: str
    kind: str  # "trig", "polynomial" or "rational"
    build: Callable[[], object]
    checks: list[Check] = field(default_factory=list)

    @property
    def field(self):
        return self.build()


# -- builders (memoised) ---------------------------------------------------------


@lru_cache(maxsize=None)
def _v() -> VectorField:
    return ansatz_field(I_PARAMS)


@lru_cache(maxsize=None)
def _w() -> VectorField:
    return curl(_v())


@lru_cache(maxsize=None)
def _i() -> VectorField:
    return _v() + _w()


@lru_cache(maxsize=None)
def _v0() -> VectorField:
    return ansatz_field(Y_PARAMS)


@lru_cache(maxsize=None)
def _w0() -> VectorField:
    return curl(_v0())


@lru_cache(maxsize=None)
def _y() -> VectorField:
    return _v0() + _w0()


@lru_cache(maxsize=None)
def _m() -> VectorField:
    return F.field_m()


@lru_cache(maxsize=None)
def _n() -> VectorField:
    return F.field_n()


@lru_cache(maxsize=None)
def _p() -> VectorField:
    return F.field_p()


@lru_cache(maxsize=None)
def _q() -> VectorField:
    return curl(_p())


@lru_cache(maxsize=None)
def _d() -> VectorField:
    return F.field_d()


@lru_cache(maxsize=None)
def _abc() -> VectorField:
    return F.abc_field(1, 1, 1)


# -- predicates -----------------------------------------------------------------


def _head(v: VectorField, degree: int, target: VectorField, scale: int) -> bool:
    return all(
        taylor_component(c, degree).scale(scale) == t.polynomial_part() for c, t in zip(v, target)
    )


def _vanishes_below(v: VectorField, degree: int) -> bool:
    return all(taylor_component(c, d).is_zero() for c in v for d in range(degree))


def _symmetric(v: VectorField) -> bool:
    return all(conjugate(v, g) == v for g in (ALPHA, BETA, GAMMA))


def _face_line_restriction() -> bool:
    from .dynamics import upsilon_expr

    ups = upsilon_expr()
    comps = restrict_to_line(_i(), (PHI, 1, 0))
    return comps[0] == ups.scale(PHI) and comps[1] == ups and comps[2].is_zero()


def _abc_random(count: int = 20, seed: int = 7) -> bool:
    rng = random.Random(seed)
    for _ in range(count):
        a, b, c = (Fraction(rng.randint(-40, 40), rng.randint(1, 15)) for _ in range(3))
        v = F.abc_field(gn(a), gn(b), gn(c))
        if curl(v) != v:
            return False
    return True


def _d_checks() -> list[Check]:
    swap, rot = F.dihedral_generators()
    head = F.field_d_head()
    return [
        Check("conjugate(D, reflection) = D", "planar field: 6-fold dihedral symmetry", lambda: conjugate(_d(), swap) == _d()),
        Check("conjugate(D, rotation) = D", "planar field: 6-fold dihedral symmetry", lambda: conjugate(_d(), rot) == _d()),
        Check("laplacian(D) = -D", "planar field solves Helmholtz", lambda: vector_laplacian(_d()) == -_d()),
        Check("div(D) = 0", "planar field is solenoidal", lambda: divergence(_d()).is_zero()),
        Check(
            "taylor(D, 2) = (3/8)(2xy-x²+y², 2xy+x²-y²)",
            "planar field Taylor head",
            lambda: all(taylor_component(c, 2) == h for c, h in zip(_d(), head))
            and _vanishes_below(_d(), 2),
        ),
    ]


def _sasakian_checks() -> list[Check]:
    b = R.sasakian_field
    mult = R.curl_multiplier
    return [
        Check("B × curl(B) = 0", "stereographic contact field is Beltrami", lambda: R.is_beltrami(b())),
        Check(
            "curl(B) = 4/(1+r²)·B",
            "stereographic contact field: curl factor",
            lambda: R.rf_equal(R.rf_curl(b()), b().multiply(mult())),
        ),
        Check(
            "Klein average of B = 0",
            "averaging over the Klein group",
            lambda: R.rf_group_average(b(), klein_group()).is_zero(),
        ),
        Check("|B|²(1+r²)² = 16", "stereographic contact field: speed", lambda: R.speed_identity(b(), 16)),
    ]


def _averaged_checks() -> list[Check]:
    f = R.averaged_field
    return [
        Check(
            "β-average of B (scale 1/4) = F",
            "cyclic average of the contact field",
            lambda: R.rf_equal(R.rf_group_average(R.sasakian_field(), _cyclic_group(), gn("1/4")), f()),
        ),
        Check("F × curl(F) = 0", "averaged field is Beltrami", lambda: R.is_beltrami(f())),
        Check(
            "curl(F) = 4/(1+r²)·F",
            "averaged field: curl factor",
            lambda: R.rf_equal(R.rf_curl(f()), f().multiply(R.curl_multiplier())),
        ),
        Check("|F|²(1+r²)² = 3", "averaged field: speed", lambda: R.speed_identity(f(), 3)),
    ]


def _cyclic_group():
    from .linalg import generate_group

    return generate_group([BETA])


# -- the registry -----------------------------------------------------------------


def _entries() -> list[CatalogEntry]:
    P_SCALE, M_SCALE = F.P_SCALE, F.M_SCALE
    return [
        CatalogEntry(
            "V",
            "even part of the icosahedral curl eigenfield, from the ansatz",
            "trig",
            _v,
            [
                Check("ansatz(V) = closed form", "icosahedral field, displayed formula", lambda: _v() == F.closed_v()),
                Check("div(V) = 0", "icosahedral field is solenoidal", lambda: divergence(_v()).is_zero()),
                Check("laplacian(V) = -V", "icosahedral field solves Helmholtz", lambda: vector_laplacian(_v()) == -_v()),
                Check("tau_swap(V_x) = V_x", "Galois symmetry of the first component", lambda: tau_swap(_v()[0]) == _v()[0]),
                Check("taylor(V, <6) = 0", "icosahedral field Taylor start", lambda: _vanishes_below(_v(), 6)),
                Check("taylor(V, 6) = M/768", "icosahedral field Taylor head", lambda: _head(_v(), 6, _m(), M_SCALE)),
            ],
        ),
        CatalogEntry(
            "W",
            "odd part, the curl of V",
            "trig",
            _w,
            [
                Check("curl(V) = W closed form", "icosahedral field, displayed formula", lambda: _w() == F.closed_w()),
                Check("curl(W) = V", "curl swaps the even and odd parts", lambda: curl(_w()) == _v()),
                Check("tau_swap(W_x) = -W_x", "Galois symmetry of the first component", lambda: tau_swap(_w()[0]) == -_w()[0]),
                Check("conjugate(W, -I) = W", "odd part under the central inversion", lambda: conjugate(_w(), MINUS_I) == _w()),
                Check("taylor(W, <5) = 0", "odd part Taylor start", lambda: _vanishes_below(_w(), 5)),
                Check("taylor(W, 5) = N/768", "odd part Taylor head", lambda: _head(_w(), 5, _n(), M_SCALE)),
            ],
        ),
        CatalogEntry(
            "I",
            "icosahedral curl eigenfield V + W",
            "trig",
            _i,
            [
                Check("curl(I) = I", "icosahedral curl eigenfield", lambda: curl(_i()) == _i()),
                Check("conjugate(I, g) = I for α, β, γ", "icosahedral symmetry", lambda: _symmetric(_i())),
                Check("restrict(I, (φ,1,0)) = (φΥ, Υ, 0)", "field on a 5-fold axis", _face_line_restriction),
            ],
        ),
        CatalogEntry(
            "V0",
            "even part of the second icosahedral eigenfield, from the ansatz",
            "trig",
            _v0,
            [
                Check("ansatz(V0) = closed form", "second icosahedral field, displayed formula", lambda: _v0() == F.closed_v0()),
                Check("div(V0) = 0", "second field is solenoidal", lambda: divergence(_v0()).is_zero()),
                Check("laplacian(V0) = -V0", "second field solves Helmholtz", lambda: vector_laplacian(_v0()) == -_v0()),
            ],
        ),
        CatalogEntry(
            "W0",
            "odd part of the second field, the curl of V0",
            "trig",
            _w0,
            [Check("curl(W0) = V0", "curl swaps the even and odd parts", lambda: curl(_w0()) == _v0())],
        ),
        CatalogEntry(
            "Y",
            "second icosahedral curl eigenfield V0 + W0",
            "trig",
            _y,
            [
                Check("curl(Y) = Y", "second icosahedral curl eigenfield", lambda: curl(_y()) == _y()),
                Check("conjugate(Y, g) = Y for α, β, γ", "icosahedral symmetry", lambda: _symmetric(_y())),
                Check("taylor(V0, <10) = 0", "second field Taylor start", lambda: _vanishes_below(_v0(), 10)),
                Check("taylor(V0, 10) = P/23224320", "second field Taylor head", lambda: _head(_v0(), 10, _p(), P_SCALE)),
                Check("taylor(W0, 9) = Q/23224320", "second field odd Taylor head", lambda: _head(_w0(), 9, _q(), P_SCALE)),
            ],
        ),
        CatalogEntry(
            "M",
            "degree 6 polynomial head of V, scaled by 768",
            "polynomial",
            _m,
            [
                Check("M = 768·taylor(V, 6)", "icosahedral field Taylor head", lambda: _head(_v(), 6, _m(), M_SCALE)),
                Check("x²+y²+z² is a first integral of M", "first integrals of the head", lambda: is_first_integral(F.sphere_integral(), _m())),
                Check(
                    "(φ²x²-y²)(φ²y²-z²)(φ²z²-x²) is a first integral of M",
                    "first integrals of the head",
                    lambda: is_first_integral(F.plane_integral(), _m()),
                ),
                Check("curl(M) = N", "heads inherit the curl relation", lambda: curl(_m()) == _n()),
            ],
        ),
        CatalogEntry(
            "N",
            "degree 5 polynomial head of W, scaled by 768",
            "polynomial",
            _n,
            [Check("N = 768·taylor(W, 5)", "odd part Taylor head", lambda: _head(_w(), 5, _n(), M_SCALE))],
        ),
        CatalogEntry(
            "P",
            "degree 10 polynomial head of V0, scaled by 23224320",
            "polynomial",
            _p,
            [Check("P = 23224320·taylor(V0, 10)", "second field Taylor head", lambda: _head(_v0(), 10, _p(), P_SCALE))],
        ),
        CatalogEntry(
            "Q",
            "curl of P",
            "polynomial",
            _q,
            [
                Check("Q = curl(P) ≠ 0", "second field odd head is nonzero", lambda: not _q().is_zero()),
                Check("Q = 23224320·taylor(W0, 9)", "second field odd Taylor head", lambda: _head(_w0(), 9, _q(), P_SCALE)),
            ],
        ),
        CatalogEntry("D", "planar field with 6-fold dihedral symmetry (over Q(√3))", "trig", _d, _d_checks()),
        CatalogEntry(
            "ABC",
            "ABC flow with A = B = C = 1",
            "trig",
            _abc,
            [
                Check("curl(ABC) = ABC", "ABC flow is a curl eigenfield", lambda: curl(_abc()) == _abc()),
                Check("curl = itself for 20 random rational (A,B,C)", "ABC flow is a curl eigenfield", _abc_random),
            ],
        ),
        CatalogEntry(
            "B_sasakian",
            "stereographic image of the contact field on the 3-sphere",
            "rational",
            R.sasakian_field,
            _sasakian_checks(),
        ),
        CatalogEntry(
            "F_averaged",
            "cyclic average of B_sasakian",
            "rational",
            R.averaged_field,
            _averaged_checks(),
        ),
    ]


class FieldCatalog:
    def __init__(self, entries: list[CatalogEntry]):
        self._entries = {e.name: e for e in entries}

    def names(self) -> list[str]:
        return list(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def entry(self, name: str) -> CatalogEntry:
        try:
            return self._entries[name]
        except KeyError:
            raise CatalogError(f"unknown field {name!r}; known fields: {', '.join(self.names())}") from None

    def __getitem__(self, name: str):
        return self.entry(name).field

    def verify(self, name: str) -> list[CheckResult]:
        e = self.entry(name)
        return [CheckResult(name, c.name, c.anchor, bool(c.predicate())) for c in e.checks]

    def require(self, name: str) -> None:
        """Run every check of ``name``; raise on the first failure."""
        for r in self.verify(name):
            if not r.passed:
                raise CatalogVerificationError(name, r.name)

    def descriptor(self, name: str) -> dict:
        e = self.entry(name)
        v = e.field
        if e.kind == "rational":
            return {"name": name, "dimension": 3, "kind": e.kind, "components": v.to_json()}
        return {"name": name, "dimension": v.n, "kind": e.kind, "terms": v.to_json()}


@lru_cache(maxsize=None)
def catalog() -> FieldCatalog:
    return FieldCatalog(_entries())
