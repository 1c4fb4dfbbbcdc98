"""Exact matrices over Q(√5), finite matrix groups and linear solving."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Sequence

from .exactnum import ONE, PHI, PHI_INV, ZERO, GoldenNumber, gn

Vec = tuple  # tuple of GoldenNumber


def vec(*entries) -> Vec:
    return tuple(gn(e) for e in entries)


def dot(u: Sequence[GoldenNumber], v: Sequence[GoldenNumber]) -> GoldenNumber:
    total = ZERO
    for a, b in zip(u, v):
        total = total + a * b
    return total


class Matrix:
    """Dense matrix of :class:`GoldenNumber` entries, immutable."""

    __slots__ = ("rows", "_key")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(gn(x) for x in row) for row in rows)
        if len({len(r) for r in self.rows}) > 1:
            raise ValueError("ragged matrix")
        self._key = None

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, *entries) -> Matrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vec:
        return tuple(r[j] for r in self.rows)

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(x.key() for r in self.rows for x in r)
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            cols = list(zip(*other.rows))
            return Matrix([[dot(r, c) for c in cols] for r in self.rows])
        return tuple(dot(r, other) for r in self.rows)

    def __neg__(self) -> Matrix:
        return Matrix([[-x for x in r] for r in self.rows])

    @property
    def T(self) -> Matrix:
        return Matrix(list(zip(*self.rows)))

    def det(self) -> GoldenNumber:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        # fraction-based elimination; sizes here are tiny
        a = [list(r) for r in self.rows]
        det = ONE
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return ZERO
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            det = det * a[c][c]
            inv = a[c][c].inverse()
            for r in range(c + 1, n):
                f = a[r][c] * inv
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return det

    def inverse(self) -> Matrix:
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        if self.is_orthogonal():
            return self.T
        cols = []
        for j in range(n):
            rhs = [ONE if i == j else ZERO for i in range(n)]
            sol = solve_linear(LinearSystem(self.rows, rhs))
            if sol is None or sol.basis:
                raise ValueError("matrix is not invertible")
            cols.append(sol.particular)
        return Matrix(list(zip(*cols)))

    def is_orthogonal(self) -> bool:
        n, m = self.shape
        return n == m and (self.T @ self) == Matrix.identity(n)

    def is_special_orthogonal(self) -> bool:
        return self.is_orthogonal() and self.det() == ONE

    def tau(self) -> Matrix:
        return Matrix([[x.tau() for x in r] for r in self.rows])

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self) -> str:
        return "Matrix(" + repr(self.to_json()) + ")"


def _cmp_gn(a: GoldenNumber, b: GoldenNumber) -> int:
    return (a - b).sign()


def _cmp_matrices(m1: Matrix, m2: Matrix) -> int:
    for r1, r2 in zip(m1.rows, m2.rows):
        for a, b in zip(r1, r2):
            c = _cmp_gn(a, b)
            if c:
                return c
    return 0


# -- the groups -----------------------------------------------------------

ALPHA = Matrix.diag(-1, -1, 1)
BETA = Matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
GAMMA = Matrix(
    [
        [gn("1/2"), -PHI / 2, PHI_INV / 2],
        [PHI / 2, PHI_INV / 2, gn("-1/2")],
        [PHI_INV / 2, gn("1/2"), PHI / 2],
    ]
)
MINUS_I = -Matrix.identity(3)


class GroupOrderExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MatrixGroup:
    """A finite matrix group: sorted elements plus the generators used."""

    elements: tuple[Matrix, ...]
    generators: tuple[Matrix, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Matrix) -> bool:
        return g in set(self.elements)

    def is_closed(self) -> bool:
        members = set(self.elements)
        return all(g @ h in members for g in self.elements for h in self.elements) and all(
            g.inverse() in members for g in self.elements
        )

    def to_json(self) -> list:
        return [g.to_json() for g in self.elements]


def generate_group(generators: Sequence[Matrix], order_cap: int = 120) -> MatrixGroup:
    """Breadth-first closure of ``generators`` under multiplication.

    Raises :class:`GroupOrderExceeded` once more than ``order_cap`` distinct
    elements appear (guards against generators of infinite order).
    """
    if order_cap < 1:
        raise ValueError("order_cap must be >= 1")
    gens = tuple(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].shape[0]
    ident = Matrix.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g @ s
            if h not in seen:
                seen.add(h)
                if len(seen) > order_cap:
                    raise GroupOrderExceeded(f"closure exceeds order cap {order_cap}")
                queue.append(h)
    elements = sorted(seen, key=cmp_to_key(_cmp_matrices))
    return MatrixGroup(tuple(elements), gens)


def icosahedral_group() -> MatrixGroup:
    return generate_group([ALPHA, BETA, GAMMA])


def tetrahedral_group() -> MatrixGroup:
    return generate_group([ALPHA, BETA])


def klein_group() -> MatrixGroup:
    elems = [
        Matrix.identity(3),
        Matrix.diag(-1, -1, 1),
        Matrix.diag(-1, 1, -1),
        Matrix.diag(1, -1, -1),
    ]
    return MatrixGroup(tuple(sorted(elems, key=cmp_to_key(_cmp_matrices))), tuple(elems[1:]))


# -- lines ----------------------------------------------------------------


def canonical_direction(v: Sequence[GoldenNumber]) -> Vec:
    """Scale ``v`` so its first nonzero coordinate is exactly 1 (one per line)."""
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("zero vector has no direction")
    inv = lead.inverse()
    return tuple(x * inv for x in v)


def canonical_ray(v: Sequence[GoldenNumber]) -> Vec:
    """Scale ``v`` by a positive number so its first nonzero coordinate is ±1."""
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("zero vector has no direction")
    inv = lead.inverse() * lead.sign()
    return tuple(x * inv for x in v)


def _orbit(group: MatrixGroup, seed: Sequence, canon) -> dict:
    seed = tuple(gn(x) for x in seed)
    if not any(seed):
        raise ValueError("zero seed")
    out: dict = {}
    for g in group:
        image = g @ seed
        d = canon(image)
        out.setdefault(tuple(x.key() for x in d), (d, image, g))
    return out


def orbit_of_line(group: MatrixGroup, seed: Sequence) -> list[Vec]:
    """Distinct half-lines ``R₊·(g·seed)`` through the origin, in group order.

    Rays are what the symmetry-line counts 12/20/30 refer to: the five-fold
    axis through ``(φ, 1, 0)`` meets the unit sphere in 12 points, i.e. six
    full lines.  Use :func:`orbit_of_axis` for full lines.
    """
    return [d for d, _, _ in _orbit(group, seed, canonical_ray).values()]


def orbit_of_axis(group: MatrixGroup, seed: Sequence) -> list[Vec]:
    """Distinct full lines ``R·(g·seed)``, first nonzero coordinate 1."""
    return [d for d, _, _ in _orbit(group, seed, canonical_direction).values()]


def orbit_representatives(group: MatrixGroup, seed: Sequence) -> list[tuple[Vec, Matrix]]:
    """One ``(g·seed, g)`` per ray, keeping the seed's length."""
    return [(image, g) for _, image, g in _orbit(group, seed, canonical_ray).values()]


def lines_to_json(lines: Sequence[Vec]) -> str:
    return json.dumps([[str(x) for x in v] for v in lines])


# -- linear systems -------------------------------------------------------


@dataclass
class LinearSystem:
    """``matrix · x = rhs`` over the quadratic field."""

    matrix: Sequence[Sequence[GoldenNumber]]
    rhs: Sequence[GoldenNumber] | None = None

    def __post_init__(self):
        self.matrix = [[gn(x) for x in row] for row in self.matrix]
        ncols = {len(r) for r in self.matrix}
        if len(ncols) > 1:
            raise ValueError("ragged coefficient matrix")
        if self.rhs is None:
            self.rhs = [ZERO] * len(self.matrix)
        self.rhs = [gn(x) for x in self.rhs]
        if len(self.rhs) != len(self.matrix):
            raise ValueError("right-hand side length does not match the row count")

    @property
    def n_unknowns(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def residual(self, x: Sequence[GoldenNumber]) -> list[GoldenNumber]:
        return [dot(row, x) - b for row, b in zip(self.matrix, self.rhs)]


@dataclass
class AffineSolution:
    """``particular + span(basis)``; ``free`` lists the free-variable indices."""

    particular: Vec
    basis: list[Vec]
    pivots: list[int]
    free: list[int]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def point(self, params: Sequence) -> Vec:
        x = list(self.particular)
        for t, b in zip(params, self.basis):
            t = gn(t)
            x = [xi + t * bi for xi, bi in zip(x, b)]
        return tuple(x)


def solve_linear(
    system: LinearSystem,
    n_unknowns: int | None = None,
    column_order: Sequence[int] | None = None,
) -> AffineSolution | None:
    """Exact Gauss-Jordan elimination.

    Pivots are taken as the first nonzero entry, scanning columns in
    ``column_order`` (natural order by default).  Returns ``None`` when the
    system is inconsistent.  Basis vectors have a 1 in their own free
    coordinate and 0 in the other free coordinates.
    """
    n = system.n_unknowns if n_unknowns is None else n_unknowns
    order = list(range(n)) if column_order is None else list(column_order)
    if sorted(order) != list(range(n)):
        raise ValueError("column_order must be a permutation of the unknowns")
    rows = [list(r) + [b] for r, b in zip(system.matrix, system.rhs)]
    pivots: list[int] = []
    r = 0
    for c in order:
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][n]:
            return None
    free = [c for c in range(n) if c not in pivots]
    particular = [ZERO] * n
    for i, c in enumerate(pivots):
        particular[c] = rows[i][n]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(tuple(v))
    return AffineSolution(tuple(particular), basis, pivots, sorted(free))
