"""The eleven-parameter icosahedral ansatz and its staged linear constraints.

The scalar generator ``G`` is a Klein-four-invariant combination of
``{1, sin, cos}`` of the 12 forms ``ℓ_{w,a}`` (plus the axis forms ``y``
and ``z``) whose coefficients are linear in the parameters ``a … k``.  Every
functional constraint (Taylor head, zero divergence, γ-invariance) is turned
into linear equations by reading off canonical-form coefficients, and those
equations are solved exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, NamedTuple, Sequence

from .exactnum import ONE, PHI, PHI_INV, ZERO, GoldenNumber, gn
from .linalg import (
    ALPHA,
    BETA,
    GAMMA,
    AffineSolution,
    LinearSystem,
    Matrix,
    dot,
    solve_linear,
)
from .poly import Polynomial
from .trigexpr import (
    LinearForm,
    TrigExpr,
    VectorField,
    conjugate,
    cyclic_field,
    divergence,
    helmholtz_residual,
    taylor_component,
)

PARAM_NAMES = tuple("abcdefghijk")
HALF = gn("1/2")


class AnsatzParams(NamedTuple):
    a: GoldenNumber = ZERO
    b: GoldenNumber = ZERO
    c: GoldenNumber = ZERO
    d: GoldenNumber = ZERO
    e: GoldenNumber = ZERO
    f: GoldenNumber = ZERO
    g: GoldenNumber = ZERO
    h: GoldenNumber = ZERO
    i: GoldenNumber = ZERO
    j: GoldenNumber = ZERO
    k: GoldenNumber = ZERO

    @classmethod
    def of(cls, *values) -> AnsatzParams:
        return cls(*(gn(v) for v in values))

    def scale(self, c) -> AnsatzParams:
        c = gn(c)
        return AnsatzParams(*(v * c for v in self))

    def tau(self) -> AnsatzParams:
        return AnsatzParams(*(v.tau() for v in self))

    def to_json(self) -> dict[str, str]:
        return {name: str(v) for name, v in zip(PARAM_NAMES, self)}


# Coefficients that reproduce the closed forms of V (head M/768) and V0.
I_PARAMS = AnsatzParams.of(
    1, 1, 0, 0, 0, PHI_INV / 2, -PHI / 2, PHI / 2, HALF, -HALF, PHI_INV / 2
)
Y_PARAMS = AnsatzParams.of(
    -2 * PHI_INV, 2 * PHI, 0, 0, 0, -(PHI_INV**2), -(PHI**2), -1, PHI, PHI_INV, 1
)


# -- linear forms ---------------------------------------------------------

_J_X = {
    0: (HALF, PHI / 2, PHI_INV / 2),
    1: (-HALF, PHI / 2, PHI_INV / 2),
    2: (HALF, -PHI / 2, PHI_INV / 2),
    3: (HALF, PHI / 2, -PHI_INV / 2),
}


def unit_vector(w: str, a: int) -> tuple[GoldenNumber, ...]:
    """The vector ``j_{w,a}``; the y and z families are cyclic images of x."""
    p, q, r = _J_X[a]
    if w == "x":
        return (p, q, r)
    if w == "y":  # ℓ_{y,a}(x,y,z) = ℓ_{x,a}(y,z,x)
        return (r, p, q)
    if w == "z":  # ℓ_{z,a}(x,y,z) = ℓ_{x,a}(z,x,y)
        return (q, r, p)
    raise ValueError(f"unknown family {w!r}")


def ell(w: str, a: int) -> LinearForm:
    return LinearForm(unit_vector(w, a))


def linear_forms() -> dict[str, LinearForm]:
    """The 12 forms ``l_{w,a}`` keyed ``"x0" … "z3"``, plus the axis forms."""
    forms = {f"{w}{a}": ell(w, a) for w in "xyz" for a in range(4)}
    for i, w in enumerate("xyz"):
        forms[w] = LinearForm(ONE if j == i else ZERO for j in range(3))
    return forms


# -- the ansatz -----------------------------------------------------------

_REFLECT = {
    "id": (1, 1, 1),
    "xy": (-1, -1, 1),
    "xz": (-1, 1, -1),
    "yz": (1, -1, -1),
}


def _reflected(form: LinearForm, which: str) -> Polynomial:
    signs = _REFLECT[which]
    return Polynomial.linear([c * s for c, s in zip(form.coeffs, signs)])


def _block(coef: GoldenNumber, pattern, lin: tuple, family: str) -> TrigExpr:
    """One row pair of the ansatz: the ``cos`` quartet and the ``sin`` quartet.

    ``pattern`` lists ``(index a, cos sign, reflection, sin sign)`` for the
    four forms of ``family``; ``lin`` is the pair of (coefficient, form) making
    up the linear polynomial in front of the sines.
    """
    total = TrigExpr.zero(3)
    for a, cos_sign, which, sin_sign in pattern:
        form = ell(family, a)
        if coef:
            total = total + TrigExpr.cos(form, Polynomial.constant(3, coef * cos_sign))
        poly = Polynomial.zero(3)
        for c, lf in lin:
            if c:
                poly = poly + _reflected(lf, which).scale(c * sin_sign)
        if poly:
            total = total + TrigExpr.sin(form, poly)
    return total


_PATTERNS = {
    "x": [(0, 1, "id", 1), (3, -1, "xy", 1), (2, -1, "xz", 1), (1, 1, "yz", -1)],
    "y": [(0, 1, "id", 1), (2, -1, "xy", 1), (1, -1, "xz", 1), (3, 1, "yz", -1)],
    "z": [(0, 1, "id", 1), (1, -1, "xy", 1), (3, -1, "xz", 1), (2, 1, "yz", -1)],
}


def build_ansatz(p: AnsatzParams | Sequence) -> TrigExpr:
    """The Klein-invariant scalar generator ``G`` for parameters ``a … k``."""
    p = AnsatzParams.of(*p)
    x, y, z = (Polynomial.variable(3, i) for i in range(3))
    g = TrigExpr.sin((0, 1, 0), z.scale(p.a)) + TrigExpr.sin((0, 0, 1), y.scale(p.b))
    g = g + _block(p.c, _PATTERNS["x"], ((p.f, ell("z", 2)), (p.g, ell("y", 1))), "x")
    g = g + _block(p.d, _PATTERNS["y"], ((p.h, ell("x", 2)), (p.i, ell("z", 1))), "y")
    g = g + _block(p.e, _PATTERNS["z"], ((p.j, ell("y", 2)), (p.k, ell("x", 1))), "z")
    if not klein_invariant(g):
        raise AssertionError("ansatz lost its Klein-four invariance")
    return g


def klein_invariant(g: TrigExpr) -> bool:
    """``-G(-x,-y,z) = G`` and ``G(x,-y,-z) = G``."""
    flip_xy = g.linear_substitute(Matrix.diag(-1, -1, 1).rows)
    flip_yz = g.linear_substitute(Matrix.diag(1, -1, -1).rows)
    return (-flip_xy) == g and flip_yz == g


@lru_cache(maxsize=None)
def _basis_generators() -> tuple[TrigExpr, ...]:
    out = []
    for idx in range(11):
        vals = [ZERO] * 11
        vals[idx] = ONE
        out.append(build_ansatz(vals))
    return tuple(out)


def ansatz_field(p: AnsatzParams | Sequence) -> VectorField:
    return cyclic_field(build_ansatz(p))


# -- harvesting linear equations --------------------------------------------


def harvest(
    functional: Callable[[TrigExpr], Sequence],
    target: Sequence | None = None,
    params: Sequence[int] = tuple(range(11)),
) -> tuple[list[list[GoldenNumber]], list[GoldenNumber]]:
    """Linear equations ``Σ_i coef_i·p_i = target`` for a functional linear in ``G``.

    ``functional`` maps a generator to a list of :class:`TrigExpr` or
    :class:`Polynomial` objects; one equation is produced for every canonical
    coefficient that appears in any of them.
    """
    gens = _basis_generators()
    columns = [_coefficient_table(functional(gens[i])) for i in range(11)]
    rhs_table = _coefficient_table(target) if target is not None else {}
    keys = set(rhs_table)
    for col in columns:
        keys.update(col)
    rows, rhs = [], []
    for key in sorted(keys, key=repr):
        rows.append([columns[i].get(key, ZERO) if i in params else ZERO for i in range(11)])
        rhs.append(rhs_table.get(key, ZERO))
    return rows, rhs


def _coefficient_table(objs: Sequence) -> dict:
    table = {}
    for slot, obj in enumerate(objs):
        if isinstance(obj, Polynomial):
            obj = TrigExpr.from_polynomial(obj)
        for (kind, form), e, c in obj.coefficients():
            fk = form.sort_key() if form is not None else None
            table[(slot, kind, fk, e)] = c
    return table


def taylor_head_functional(max_zero_degree: int, head_degree: int | None):
    def fn(g: TrigExpr) -> list[Polynomial]:
        degs = list(range(max_zero_degree + 1))
        if head_degree is not None:
            degs.append(head_degree)
        return [taylor_component(g, d) for d in degs]

    return fn


def divergence_functional(g: TrigExpr) -> list[TrigExpr]:
    return [divergence(cyclic_field(g))]


def gamma_scalar_functional(g: TrigExpr) -> list[TrigExpr]:
    """``(A + φB + φ⁻¹C)/2 - G`` with ``(A, B, C) = (G, G_y, G_z)∘γ``."""
    rows = GAMMA.rows
    a = g.linear_substitute(rows)
    b = g.permute([1, 2, 0]).linear_substitute(rows)
    c = g.permute([2, 0, 1]).linear_substitute(rows)
    lhs = (a + b.scale(PHI) + c.scale(PHI_INV)).scale(HALF)
    return [lhs - g]


def gamma_conjugation_functional(g: TrigExpr) -> list[TrigExpr]:
    """All three components of ``γ⁻¹∘H∘γ - H`` for ``H = cyclic_field(G)``."""
    h = cyclic_field(g)
    return list((conjugate(h, GAMMA) - h).components)


def helmholtz_functional(g: TrigExpr) -> list[TrigExpr]:
    return [helmholtz_residual(g)]


# -- staged solution spaces -------------------------------------------------

STAGES = ("taylor_match", "divergence_zero", "gamma_invariance")

# Pivot search runs from k back to a, so the surviving free parameters are the
# earliest letters (a, b, c, d, f after the Taylor stage).
COLUMN_ORDER = tuple(reversed(range(11)))


class InconsistentConstraints(ValueError):
    pass


@dataclass
class AnsatzSpace:
    """Affine set ``particular + span(basis)`` of parameter vectors."""

    particular: AnsatzParams
    basis: list[AnsatzParams]
    stage: str
    free: list[str]
    equations: list[list[GoldenNumber]] = field(default_factory=list, repr=False)
    rhs: list[GoldenNumber] = field(default_factory=list, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def point(self, *t) -> AnsatzParams:
        vals = list(self.particular)
        for ti, b in zip(t, self.basis):
            ti = gn(ti)
            vals = [v + ti * bv for v, bv in zip(vals, b)]
        return AnsatzParams(*vals)

    def contains(self, p: AnsatzParams | Sequence) -> bool:
        p = [gn(v) for v in p]
        return all(dot(row, p) == r for row, r in zip(self.equations, self.rhs))

    def residual_is_zero(self, p: AnsatzParams) -> bool:
        return self.contains(p)


def full_space() -> AnsatzSpace:
    zero = AnsatzParams()
    basis = []
    for idx in range(11):
        vals = [ZERO] * 11
        vals[idx] = ONE
        basis.append(AnsatzParams(*vals))
    return AnsatzSpace(zero, basis, "initial", list(PARAM_NAMES))


def _solve(rows, rhs, stage: str) -> AnsatzSpace:
    sol = solve_linear(LinearSystem(rows, rhs), n_unknowns=11, column_order=COLUMN_ORDER)
    if sol is None:
        raise InconsistentConstraints(f"constraints inconsistent at stage {stage!r}")
    return _space_from_solution(sol, rows, rhs, stage)


def _space_from_solution(sol: AffineSolution, rows, rhs, stage: str) -> AnsatzSpace:
    return AnsatzSpace(
        AnsatzParams(*sol.particular),
        [AnsatzParams(*b) for b in sol.basis],
        stage,
        [PARAM_NAMES[i] for i in sol.free],
        rows,
        rhs,
    )


def _head_target() -> list:
    from .fields import varpi  # local import: fields depends on this module

    zeros = [Polynomial.zero(3)] * 6
    return zeros + [varpi()]


def constraint_stage(space: AnsatzSpace, stage: str) -> AnsatzSpace:
    """Add one stage of constraints and re-solve the accumulated system.

    Stages must be applied in the order ``taylor_match``, ``divergence_zero``,
    ``gamma_invariance``.
    """
    if stage not in STAGES:
        raise ValueError(f"unknown stage {stage!r}")
    expected_prev = "initial" if stage == STAGES[0] else STAGES[STAGES.index(stage) - 1]
    if space.stage != expected_prev:
        raise ValueError(f"stage {stage!r} must follow {expected_prev!r}, not {space.stage!r}")
    if stage == "taylor_match":
        rows, rhs = harvest(taylor_head_functional(5, 6), _head_target())
    elif stage == "divergence_zero":
        rows, rhs = harvest(divergence_functional)
    else:
        rows, rhs = harvest(gamma_scalar_functional)
    return _solve(space.equations + rows, space.rhs + rhs, stage)


def run_pipeline() -> list[AnsatzSpace]:
    """All three stages from the full 11-parameter space."""
    spaces = [full_space()]
    for stage in STAGES:
        spaces.append(constraint_stage(spaces[-1], stage))
    return spaces


def point_with_a(space: AnsatzSpace, a) -> AnsatzParams:
    """The point of a one-dimensional space whose ``a`` coordinate equals ``a``."""
    if space.dimension != 1:
        raise ValueError("need a one-dimensional space")
    p, v = space.particular, space.basis[0]
    if not v.a:
        raise ValueError("a is constant along this space")
    return space.point((gn(a) - p.a) / v.a)


def is_tau_symmetric(p: AnsatzParams) -> bool:
    """``a = τ(b)``, the choice that makes the field commute with the τ-swap."""
    return p.a == p.b.tau()


def b_as_function_of_a(space: AnsatzSpace) -> tuple[GoldenNumber, GoldenNumber]:
    """``(slope, intercept)`` with ``b = slope·a + intercept`` along a 1-dim space."""
    if space.dimension != 1:
        raise ValueError("need a one-dimensional space")
    p, v = space.particular, space.basis[0]
    if not v.a:
        raise ValueError("a is constant along this space")
    slope = v.b / v.a
    return slope, p.b - slope * p.a


def icosahedral_solution_space(constants_only: bool = False) -> AnsatzSpace:
    """Homogeneous parameters whose cyclic field is solenoidal, Helmholtz and I-invariant.

    Helmholtz and Klein invariance hold term by term by construction (and are
    re-checked here); β-invariance is built into the cyclic field; γ-invariance
    is imposed by full conjugation.  ``constants_only`` restricts the ansatz to
    the ``cos`` terms with constant coefficients ``c, d, e``.
    """
    rows, rhs = harvest(helmholtz_functional)
    if any(any(r) for r in rows):
        raise AssertionError("ansatz terms do not all satisfy the Helmholtz equation")
    rows, rhs = [], []
    for fn in (divergence_functional, gamma_conjugation_functional):
        r, b = harvest(fn)
        rows += r
        rhs += b
    if constants_only:
        for idx, name in enumerate(PARAM_NAMES):
            if name not in "cde":
                row = [ZERO] * 11
                row[idx] = ONE
                rows.append(row)
                rhs.append(ZERO)
    stage = "constants_only" if constants_only else "homogeneous"
    return _solve(rows, rhs, stage)


def gamma_invariant(g: TrigExpr) -> bool:
    h = cyclic_field(g)
    return conjugate(h, GAMMA) == h


def icosahedrally_invariant(v: VectorField) -> bool:
    return all(conjugate(v, m) == v for m in (ALPHA, BETA, GAMMA))
