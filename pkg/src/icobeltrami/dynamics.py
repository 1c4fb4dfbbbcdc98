"""Double-precision evaluation, RK4 orbits and zeros on symmetry lines.

Exact expressions are compiled once into flat numpy tables: every monomial of
every polynomial coefficient becomes one row carrying its exponent vector,
its coefficient and the index of the trigonometric factor it multiplies.
Evaluation is then a handful of vectorised operations, which keeps a 4000
evaluation RK4 run well under a second.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .exactnum import PHI, PHI_INV, SQRT5, GoldenNumber, gn
from .linalg import Matrix, icosahedral_group, orbit_representatives
from .trigexpr import COS, ONE_KIND, SIN, TrigExpr, VectorField, restrict_to_line

_KIND_CODE = {ONE_KIND: 0, SIN: 1, COS: 2}

PHI_F = float(PHI)
SQRT5_F = float(SQRT5)
PHI_INV_F = float(PHI_INV)

DEFAULT_STEP = 1e-3
DEFAULT_SCAN_STEP = 1e-2
TEST_SEED = 20240607

# representatives of the three classes of symmetry rays, named after the
# dodecahedron: F through face centres (5-fold, 12 rays), V through vertices
# (3-fold, 20 rays), E through edge midpoints (2-fold, 30 rays)
LINE_CLASSES = {
    "F": (PHI, 1, 0),
    "V": (1, 1, 1),
    "E": (1, 0, 0),
}


class NonFiniteError(ValueError):
    """Raised when a numeric point contains NaN or infinity."""


def as_point(p: Sequence[float], n: int | None = None) -> np.ndarray:
    arr = np.asarray([float(x) for x in p], dtype=float)
    if n is not None and arr.shape != (n,):
        raise ValueError(f"expected a point with {n} coordinates, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"non-finite coordinates in {p!r}")
    return arr


class CompiledField:
    """Numeric image of a ``VectorField`` (or a list of ``TrigExpr``)."""

    def __init__(self, components: Sequence[TrigExpr]):
        comps = list(components)
        if not comps:
            raise ValueError("no components")
        n = comps[0].n
        self.n, self.m = n, len(comps)
        kinds, freqs = [], []
        exps, coefs, term_idx, comp_idx = [], [], [], []
        for ci, e in enumerate(comps):
            if e.n != n:
                raise ValueError("components live in different dimensions")
            for (kind, form), p in e.sorted_items():
                t = len(kinds)
                kinds.append(_KIND_CODE[kind])
                freqs.append([0.0] * n if form is None else [float(c) for c in form.coeffs])
                for mono, c in p.sorted_terms():
                    exps.append(mono)
                    coefs.append(float(c))
                    term_idx.append(t)
                    comp_idx.append(ci)
        self.kinds = np.array(kinds, dtype=int)
        self.freqs = np.array(freqs, dtype=float).reshape(len(kinds), n)
        self.exps = np.array(exps, dtype=int).reshape(len(exps), n)
        self.coefs = np.array(coefs, dtype=float)
        self.term_idx = np.array(term_idx, dtype=int)
        self.comp_idx = np.array(comp_idx, dtype=int)
        self._sin = self.kinds == 1
        self._cos = self.kinds == 2
        self._max_exp = int(self.exps.max()) if self.exps.size else 0

    def _trig(self, args: np.ndarray) -> np.ndarray:
        out = np.ones_like(args)
        out[..., self._sin] = np.sin(args[..., self._sin])
        out[..., self._cos] = np.cos(args[..., self._cos])
        return out

    def _monomials(self, x: np.ndarray) -> np.ndarray:
        # powers table avoids float ** int per monomial
        pw = np.ones(x.shape + (self._max_exp + 1,))
        for k in range(1, self._max_exp + 1):
            pw[..., k] = pw[..., k - 1] * x
        cols = [pw[..., i, self.exps[:, i]] for i in range(self.n)]
        out = cols[0]
        for c in cols[1:]:
            out = out * c
        return out

    def __call__(self, x: np.ndarray) -> np.ndarray:
        """Value at one point (shape ``(n,)``) or many (shape ``(N, n)``)."""
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.n:
            raise ValueError(f"expected {self.n} coordinates")
        if self.coefs.size == 0:
            return np.zeros(x.shape[:-1] + (self.m,))
        trig = self._trig(x @ self.freqs.T)
        contrib = self._monomials(x) * self.coefs * trig[..., self.term_idx]
        if x.ndim == 1:
            return np.bincount(self.comp_idx, weights=contrib, minlength=self.m)
        out = np.zeros((x.shape[0], self.m))
        for ci in range(self.m):
            out[:, ci] = contrib[:, self.comp_idx == ci].sum(axis=1)
        return out


_COMPILED: dict[int, tuple[object, CompiledField]] = {}


def compile_field(v) -> CompiledField:
    """Compile ``v`` (a VectorField, a TrigExpr or a list of them), memoised per object."""
    cached = _COMPILED.get(id(v))
    if cached is not None and cached[0] is v:
        return cached[1]
    comps = [v] if isinstance(v, TrigExpr) else list(v)
    cf = CompiledField(comps)
    _COMPILED[id(v)] = (v, cf)
    return cf


def eval_field(v, p: Sequence[float]) -> np.ndarray:
    cf = compile_field(v)
    return cf(as_point(p, cf.n))


def eval_expr(e: TrigExpr, p: Sequence[float]) -> float:
    return float(eval_field(e, p)[0])


# -- orbits -------------------------------------------------------------------


@dataclass
class OrbitRecord:
    initial: np.ndarray
    h: float
    times: np.ndarray
    points: np.ndarray
    integrator: str = "rk4"
    overflow: bool = False

    @property
    def samples(self) -> list[tuple[float, np.ndarray]]:
        return list(zip(self.times.tolist(), self.points))

    @property
    def endpoint(self) -> np.ndarray:
        return self.points[-1]

    def to_csv(self) -> str:
        names = ["x", "y", "z", "w"][: self.points.shape[1]] if self.points.shape[1] <= 4 else [
            f"x{i}" for i in range(self.points.shape[1])
        ]
        lines = [",".join(["t", *names])]
        for t, p in zip(self.times, self.points):
            lines.append(",".join(repr(float(c)) for c in (t, *p)))
        return "\n".join(lines) + "\n"


def _step_times(t_end: float, h: float) -> list[float]:
    n = int(math.floor(t_end / h))
    # a step shorter than ~1e-9 h is float noise from t_end/h, not a real step
    if t_end - n * h <= 1e-9 * h:
        n_full, tail = n, False
    else:
        n_full, tail = n, True
    times = [k * h for k in range(n_full + 1)]
    if tail:
        times.append(t_end)
    else:
        times[-1] = t_end
    return times


def rk4_step(f: Callable[[np.ndarray], np.ndarray], x: np.ndarray, h: float) -> np.ndarray:
    k1 = f(x)
    k2 = f(x + 0.5 * h * k1)
    k3 = f(x + 0.5 * h * k2)
    k4 = f(x + h * k3)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rk4_orbit(v, x0: Sequence[float], t_end: float, h: float = DEFAULT_STEP) -> OrbitRecord:
    """Classical fixed-step RK4 for ``x' = v(x)``; the last step lands on ``t_end``."""
    if not (h > 0 and math.isfinite(h)):
        raise ValueError("step size must be positive and finite")
    if not (t_end > 0 and math.isfinite(t_end)):
        raise ValueError("t_end must be positive and finite")
    f = compile_field(v)
    x = as_point(x0, f.n)
    times = _step_times(t_end, h)
    pts = [x]
    overflow = False
    with np.errstate(over="ignore", invalid="ignore"):
        for t0, t1 in zip(times, times[1:]):
            x = rk4_step(f, x, t1 - t0)
            if not np.all(np.isfinite(x)):
                overflow = True
                break
            pts.append(x)
    return OrbitRecord(
        initial=pts[0],
        h=h,
        times=np.array(times[: len(pts)]),
        points=np.array(pts),
        overflow=overflow,
    )


# -- the scalar Υ on the face line --------------------------------------------


def upsilon(s):
    """``Υ(s) = -s√5 (1 - φ cos s + φ⁻¹ cos φs)``; accepts scalars or arrays."""
    s = np.asarray(s, dtype=float)
    out = -s * SQRT5_F * (1.0 - PHI_F * np.cos(s) + PHI_INV_F * np.cos(PHI_F * s))
    return float(out) if out.ndim == 0 else out


@dataclass
class LineZeroReport:
    line_class: str
    direction: tuple
    roots: list[float]
    brackets: list[tuple[float, float]]
    residuals: list[float] = field(default_factory=list)

    def first_positive_root(self) -> float | None:
        return next((r for r in self.roots if r > 0), None)

    def to_json(self) -> dict:
        return {
            "class": self.line_class,
            "direction": [str(gn(c)) for c in self.direction],
            "direction_float": [float(gn(c)) for c in self.direction],
            "roots": self.roots,
            "brackets": [list(b) for b in self.brackets],
            "residuals": self.residuals,
        }


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float = 0.0) -> float:
    """Bisection on a sign change; ``tol=0`` runs until the bracket is two adjacent doubles."""
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError("bisect needs a sign change on [lo, hi]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def scan_roots(
    f: Callable, s_min: float, s_max: float, scan_step: float, tol: float = 0.0
) -> tuple[list[float], list[tuple[float, float]]]:
    """Sign scan on a uniform grid, then bisection of every sign change.

    ``f`` must accept numpy arrays.  Grid points where ``f`` is exactly 0 are
    reported as roots with a degenerate bracket.
    """
    if not s_min < s_max:
        raise ValueError("need s_min < s_max")
    if not scan_step > 0:
        raise ValueError("scan_step must be positive")
    n = int(math.ceil((s_max - s_min) / scan_step))
    grid = s_min + scan_step * np.arange(n + 1)
    grid[-1] = min(grid[-1], s_max)
    vals = np.asarray(f(grid), dtype=float)
    roots, brackets = [], []
    scalar = lambda s: float(f(np.array([s]))[0])  # noqa: E731
    for i in range(len(grid)):
        if vals[i] == 0:
            roots.append(float(grid[i]))
            brackets.append((float(grid[i]), float(grid[i])))
        elif i + 1 < len(grid) and vals[i + 1] != 0 and (vals[i] > 0) != (vals[i + 1] > 0):
            lo, hi = float(grid[i]), float(grid[i + 1])
            roots.append(bisect(scalar, lo, hi, tol))
            brackets.append((lo, hi))
    return roots, brackets


def upsilon_roots(
    s_min: float = 0.0, s_max: float = 20.0, scan_step: float = DEFAULT_SCAN_STEP
) -> LineZeroReport:
    roots, brackets = scan_roots(upsilon, s_min, s_max, scan_step)
    return LineZeroReport("F", LINE_CLASSES["F"], roots, brackets)


def upsilon_expr() -> TrigExpr:
    """Exact ``Υ`` as a one-variable expression."""
    s = TrigExpr.variable(1, 0)
    inner = (
        TrigExpr.constant(1, 1)
        - TrigExpr.cos([1], None).scale(PHI)
        + TrigExpr.cos([PHI], None).scale(PHI_INV)
    )
    return (s * inner).scale(-SQRT5)


def limsup_target() -> float:
    return float(2 * SQRT5 * PHI_INV)


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def limsup_probe(n_range: Sequence[int]) -> list[tuple[float, float]]:
    """Samples ``(s, Υ(s)/s)`` at ``s = 2πℓ`` with ``2ℓ = F_{3n}``.

    ``F_{3n}`` is always even, so ``cos s = 1`` and the ratio reduces to
    ``√5 φ⁻¹ (1 - cos φs)``, which nears its maximum when ``φ F_{3n}`` is
    close to the odd integer ``F_{3n+1}``.
    """
    out = []
    for n in n_range:
        if n < 1:
            raise ValueError("Fibonacci index must be positive")
        ell = fibonacci(3 * n) // 2
        s = 2 * math.pi * ell
        # cos s = 1 exactly at these points; evaluate the reduced form to
        # avoid the rounding of cos(2πℓ) for large ℓ
        ratio = -SQRT5_F * (1.0 - PHI_F + PHI_INV_F * math.cos(PHI_F * s))
        out.append((s, ratio))
    return out


# -- zeros on the symmetry lines ----------------------------------------------


def line_scalar(v: VectorField, direction: Sequence) -> TrigExpr:
    """``s ↦ ⟨v(s·d), d⟩``, after checking ``v`` is collinear with ``d`` there."""
    comps = restrict_to_line(v, direction)
    d = [gn(c) for c in direction]
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        cross = comps[j].scale(d[k]) - comps[k].scale(d[j])
        if not cross.is_zero():
            raise ValueError(f"field is not collinear with the line {tuple(map(str, d))}")
    total = TrigExpr.zero(1)
    for c, di in zip(comps, d):
        if di:
            total = total + c.scale(di)
    return total


def line_roots(
    v: VectorField, line_class: str, s_max: float, scan_step: float = DEFAULT_SCAN_STEP
) -> LineZeroReport:
    """Roots on the representative ray of ``line_class`` over ``[0, s_max]``."""
    if line_class not in LINE_CLASSES:
        raise ValueError(f"unknown line class {line_class!r}; expected one of F, V, E")
    direction = LINE_CLASSES[line_class]
    scalar = line_scalar(v, direction)
    cf = compile_field(scalar)

    def f(s):
        s = np.atleast_1d(np.asarray(s, dtype=float))
        return cf(s[:, None])[:, 0]

    roots, brackets = scan_roots(f, 0.0, s_max, scan_step)
    vec = compile_field(v)
    dvec = np.array([float(gn(c)) for c in direction])
    residuals = [float(np.max(np.abs(vec(r * dvec)))) for r in roots]
    return LineZeroReport(line_class, direction, roots, brackets, residuals)


def line_zero_map(
    v: VectorField,
    s_max: float,
    scan_step: float = DEFAULT_SCAN_STEP,
    classes: Sequence[str] = ("F", "V", "E"),
    group=None,
) -> list[LineZeroReport]:
    """One report per symmetry ray; roots are computed on representatives only.

    For an 𝕀-invariant field ``v(g·x) = g·v(x)``, so the zeros on ``g·d``
    are those on ``d``.
    """
    group = group or icosahedral_group()
    reports = []
    for cls in classes:
        base = line_roots(v, cls, s_max, scan_step)
        for direction, _g in orbit_representatives(group, LINE_CLASSES[cls]):
            reports.append(
                LineZeroReport(
                    cls, tuple(direction), list(base.roots), list(base.brackets), list(base.residuals)
                )
            )
    return reports


# -- Newton search for zeros off the symmetry lines ----------------------------


def jacobian_fields(v: VectorField) -> list[list[TrigExpr]]:
    from .trigexpr import partial_derivative

    return [[partial_derivative(c, j) for j in range(v.n)] for c in v]


def _on_symmetry_line(x: np.ndarray, axes: np.ndarray, tol: float) -> bool:
    r = np.linalg.norm(x)
    if r < tol:
        return True
    u = x / r
    return bool(np.min(np.linalg.norm(np.cross(axes, u), axis=1)) < tol)


def symmetry_axes() -> np.ndarray:
    """Unit vectors of the 62 symmetry rays."""
    g = icosahedral_group()
    rows = []
    for cls in ("F", "V", "E"):
        for direction, _ in orbit_representatives(g, LINE_CLASSES[cls]):
            d = np.array([float(c) for c in direction])
            rows.append(d / np.linalg.norm(d))
    return np.array(rows)


@dataclass
class ZeroCandidate:
    point: np.ndarray
    residual: float
    on_symmetry_line: bool


def newton_zero_search(
    v: VectorField,
    box: float = 6.0,
    starts: int = 400,
    seed: int = TEST_SEED,
    max_iter: int = 60,
    tol: float = 1e-10,
    origin_radius: float = 0.05,
) -> list[ZeroCandidate]:
    """Newton iterations from seeded random starts in ``[-box, box]³``.

    The origin is a high-order zero that attracts Newton only linearly, so
    starts entering the ball of radius ``origin_radius`` are dropped.
    Converged points are deduplicated and tagged by whether they lie on one
    of the 62 symmetry rays (trivial zeros) or not.
    """
    f = compile_field(v)
    jac = [compile_field(row) for row in jacobian_fields(v)]
    axes = symmetry_axes()
    rng = np.random.default_rng(seed)
    found: list[ZeroCandidate] = []
    for x in rng.uniform(-box, box, size=(starts, 3)):
        converged = False
        for _ in range(max_iter):
            J = np.array([row(x) for row in jac])
            try:
                dx = np.linalg.solve(J, f(x))
            except np.linalg.LinAlgError:
                break
            x = x - dx
            r = np.linalg.norm(x)
            if not np.isfinite(r) or r > 10 * box or r < origin_radius:
                break
            if np.linalg.norm(dx) < 1e-12 * (1 + r):
                converged = True
                break
        # Newton may leave the start box; anything it converges to is kept
        if not converged:
            continue
        res = float(np.max(np.abs(f(x))))
        if res >= tol:
            continue
        if any(np.linalg.norm(x - c.point) < 1e-6 for c in found):
            continue
        found.append(ZeroCandidate(x, res, _on_symmetry_line(x, axes, 1e-6)))
    found.sort(key=lambda c: tuple(np.round(c.point, 9)))
    return found


# -- numeric cross-checks -------------------------------------------------------


def fd_curl(v, x: np.ndarray, step: float = 1e-5) -> np.ndarray:
    """Central-difference curl of a 3D field at ``x``."""
    f = compile_field(v)
    jac = np.empty((3, 3))
    for j in range(3):
        e = np.zeros(3)
        e[j] = step
        jac[:, j] = (f(x + e) - f(x - e)) / (2 * step)
    return np.array([jac[2, 1] - jac[1, 2], jac[0, 2] - jac[2, 0], jac[1, 0] - jac[0, 1]])


def fd_curl_residual(v, points: int = 100, box: float = 2.0, seed: int = TEST_SEED) -> float:
    """Largest componentwise gap between the numeric curl and ``v`` itself."""
    rng = np.random.default_rng(seed)
    f = compile_field(v)
    worst = 0.0
    for x in rng.uniform(-box, box, size=(points, 3)):
        worst = max(worst, float(np.max(np.abs(fd_curl(v, x) - f(x)))))
    return worst


def _matrix_float(g: Matrix) -> np.ndarray:
    return np.array([[float(g[i, j]) for j in range(g.shape[1])] for i in range(g.shape[0])])


def symmetry_transport_residual(v, group, points: int = 50, seed: int = TEST_SEED) -> float:
    """Largest ``|g⁻¹ v(g p) - v(p)|`` over random ``g`` and ``p``."""
    rng = np.random.default_rng(seed)
    f = compile_field(v)
    mats = [_matrix_float(g) for g in group]
    worst = 0.0
    for _ in range(points):
        g = mats[int(rng.integers(len(mats)))]
        p = rng.uniform(-3, 3, size=3)
        worst = max(worst, float(np.max(np.abs(g.T @ f(g @ p) - f(p)))))
    return worst


def collinearity_residual(v, s_values: Sequence[float]) -> float:
    """Largest ``|v(s d) × s d|`` over the three representative directions."""
    f = compile_field(v)
    worst = 0.0
    for direction in LINE_CLASSES.values():
        d = np.array([float(gn(c)) for c in direction])
        for s in s_values:
            p = s * d
            worst = max(worst, float(np.max(np.abs(np.cross(f(p), p)))))
    return worst


@dataclass
class ConvergenceReport:
    steps: tuple[float, float]
    errors: tuple[float, float]
    ratio: float
    order: float


def rk4_convergence(
    v, x0: Sequence[float] = (5.0, 6.0, 7.0), t_end: float = 1.0, h: float = 0.004, ref_factor: int = 50
) -> ConvergenceReport:
    """Endpoint errors at ``h`` and ``h/2`` against a run at ``h/ref_factor``."""
    ref = rk4_orbit(v, x0, t_end, h / ref_factor).endpoint
    e1 = float(np.linalg.norm(rk4_orbit(v, x0, t_end, h).endpoint - ref))
    e2 = float(np.linalg.norm(rk4_orbit(v, x0, t_end, h / 2).endpoint - ref))
    ratio = e1 / e2
    return ConvergenceReport((h, h / 2), (e1, e2), ratio, math.log2(ratio))
