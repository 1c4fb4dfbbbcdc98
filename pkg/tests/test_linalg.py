import random
from fractions import Fraction

import pytest
import sympy

from icobeltrami.construct import unit_vector
from icobeltrami.exactnum import ONE, PHI, ZERO, gn
from icobeltrami.linalg import (
    ALPHA,
    BETA,
    GAMMA,
    GroupOrderExceeded,
    LinearSystem,
    Matrix,
    canonical_direction,
    dot,
    generate_group,
    icosahedral_group,
    klein_group,
    orbit_of_axis,
    orbit_of_line,
    orbit_representatives,
    solve_linear,
    tetrahedral_group,
)


def test_group_orders():
    assert icosahedral_group().order == 60
    assert tetrahedral_group().order == 12
    assert generate_group([ALPHA, BETA]).order == 12
    assert generate_group([Matrix.identity(3)]).order == 1
    assert klein_group().order == 4


def test_klein_inside_tetrahedral_inside_icosahedral():
    t, i = tetrahedral_group(), icosahedral_group()
    assert all(g in t for g in klein_group())
    assert all(g in i for g in t)


def test_icosahedral_elements_are_rotations():
    g = icosahedral_group()
    assert g.is_closed()
    for m in g:
        assert m.T @ m == Matrix.identity(3)
        assert m.det() == 1


def test_order_cap():
    # a rotation by an irrational angle never closes; its powers blow through the cap
    rot = Matrix([[gn("3/5"), gn("-4/5"), 0], [gn("4/5"), gn("3/5"), 0], [0, 0, 1]])
    with pytest.raises(GroupOrderExceeded):
        generate_group([rot], order_cap=50)


def test_gamma_is_a_five_fold_rotation():
    g = Matrix.identity(3)
    powers = []
    for _ in range(5):
        g = g @ GAMMA
        powers.append(g)
    assert powers[-1] == Matrix.identity(3)
    assert all(p != Matrix.identity(3) for p in powers[:-1])
    assert GAMMA.is_special_orthogonal()


def test_klein_group_words():
    b2 = BETA @ BETA
    words = {Matrix.identity(3), ALPHA, b2 @ ALPHA @ BETA, BETA @ ALPHA @ b2}
    assert words == set(klein_group())


def test_orbit_counts():
    g = icosahedral_group()
    counts = [len(orbit_of_line(g, d)) for d in [(PHI, 1, 0), (1, 1, 1), (1, 0, 0)]]
    assert counts == [12, 20, 30]
    assert sum(counts) == 62
    # as full lines through the origin the counts halve
    assert [len(orbit_of_axis(g, d)) for d in [(PHI, 1, 0), (1, 1, 1), (1, 0, 0)]] == [6, 10, 15]


def test_orbit_of_zero_seed_rejected():
    with pytest.raises(ValueError):
        orbit_of_line(icosahedral_group(), (0, 0, 0))


def test_canonical_direction():
    assert canonical_direction((0, -2 * PHI, 4)) == (ZERO, ONE, -2 / PHI)


def test_orbit_representatives_map_seed():
    g = icosahedral_group()
    seed = (PHI, ONE, ZERO)
    for image, m in orbit_representatives(g, seed):
        assert tuple(m @ list(seed)) == tuple(image)


def test_orthonormal_frame():
    vs = [unit_vector("x", 2), unit_vector("z", 1), unit_vector("y", 0)]
    for i, u in enumerate(vs):
        for j, v in enumerate(vs):
            assert dot(u, v) == (1 if i == j else 0)


def test_solve_identity_and_zero():
    sol = solve_linear(LinearSystem(Matrix.identity(3).rows, [1, PHI, 2]))
    assert sol.particular == (ONE, PHI, gn(2)) and sol.basis == []
    sol = solve_linear(LinearSystem([[0, 0, 0]], [0]))
    assert sol.dimension == 3
    assert sorted(sol.basis) == sorted([(ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)])


def test_inconsistent_returns_none():
    assert solve_linear(LinearSystem([[1, 1], [2, 2]], [1, 3])) is None


def test_column_order_changes_free_variables():
    system = LinearSystem([[1, 1, 0]], [0])
    assert solve_linear(system).free == [1, 2]
    assert solve_linear(system, column_order=[2, 1, 0]).free == [0, 2]


def test_random_systems_against_sympy():
    rng = random.Random(3)
    for _ in range(40):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        A = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)]
        # rhs in the column space so the system is consistent
        x0 = [Fraction(rng.randint(-3, 3)) for _ in range(cols)]
        b = [sum(a * x for a, x in zip(row, x0)) for row in A]
        system = LinearSystem(A, b)
        sol = solve_linear(system)
        rank = sympy.Matrix(A).rank()
        assert sol.dimension == cols - rank
        assert all(r == 0 for r in system.residual(sol.particular))
        for v in sol.basis:
            assert all(dot(row, v) == 0 for row in system.matrix)
        assert all(r == 0 for r in system.residual(sol.point([2] * sol.dimension)))


def test_irrational_system():
    # φ x + y = 1, x - φ y = 0  =>  x = φ / (φ² + 1)
    sol = solve_linear(LinearSystem([[PHI, 1], [1, -PHI]], [1, 0]))
    assert sol.particular[0] == PHI / (PHI * PHI + 1)
