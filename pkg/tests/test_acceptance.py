"""The twelve acceptance criteria, asserted directly at their stated tolerances.

Run under pytest (a per-criterion PASS/FAIL summary is printed at the end), or
standalone with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
import sympy as sp

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (  # noqa: E402
    D_HEAD_TEX,
    LAMBDA_TEX,
    U_NUMERATOR_TEX,
    VARPI0_TEX,
    VARPI_TEX,
    X,
    Y,
    Z,
    cyclic,
    parse_tex,
    poly_to_sympy,
    upsilon_root_oracle,
)

from icobeltrami.catalog import catalog  # noqa: E402
from icobeltrami.construct import (  # noqa: E402
    I_PARAMS,
    Y_PARAMS,
    icosahedral_solution_space,
    point_with_a,
    run_pipeline,
)
from icobeltrami.dynamics import (  # noqa: E402
    LINE_CLASSES,
    fd_curl_residual,
    rk4_convergence,
    upsilon_expr,
    upsilon_roots,
)
from icobeltrami.exactnum import PHI, gn  # noqa: E402
from icobeltrami.fields import dihedral_generators, plane_integral, sphere_integral  # noqa: E402
from icobeltrami.linalg import (  # noqa: E402
    ALPHA,
    BETA,
    GAMMA,
    Matrix,
    generate_group,
    icosahedral_group,
    klein_group,
    orbit_of_line,
)
from icobeltrami.ratfunc import (  # noqa: E402
    averaged_field,
    curl_multiplier,
    is_beltrami,
    rf_curl,
    rf_equal,
    rf_group_average,
    sasakian_field,
)
from icobeltrami.trigexpr import (  # noqa: E402
    conjugate,
    curl,
    divergence,
    gradient,
    helmholtz_residual,
    is_first_integral,
    lie_bracket,
    restrict_to_line,
    tau_swap,
    taylor_component,
    vector_laplacian,
)
from icobeltrami.verification import (  # noqa: E402
    helmholtz_lemma_case,
    helmholtz_lemma_cases,
    nonzero_witness,
    random_trig_field,
)

criterion = pytest.mark.criterion


@pytest.fixture(scope="module")
def cat():
    return catalog()


def _head_equals(v, degree, tex_expr, scale):
    """Homogeneous part of ``v`` times ``scale`` equals the cyclic triple of ``tex_expr``."""
    return all(
        sp.expand(poly_to_sympy(taylor_component(c, degree)) * scale - cyclic(tex_expr, k)) == 0
        for k, c in enumerate(v)
    )


# 1 ---------------------------------------------------------------------------------


@criterion(1, "exact curl identities")
def test_criterion_01_exact_curl_identities(cat):
    v, w, v0, w0 = cat["V"], cat["W"], cat["V0"], cat["W0"]
    assert curl(v) == w
    assert curl(w) == v
    assert curl(v0) == w0
    assert curl(w0) == v0
    assert curl(cat["I"]) == cat["I"]
    assert curl(cat["Y"]) == cat["Y"]


# 2 ---------------------------------------------------------------------------------


@criterion(2, "exact symmetry")
def test_criterion_02_exact_symmetry(cat):
    i, y = cat["I"], cat["Y"]
    for g in (ALPHA, BETA, GAMMA):
        assert conjugate(i, g) == i
        assert conjugate(y, g) == y
    assert conjugate(cat["W"], -Matrix.identity(3)) == cat["W"]
    assert icosahedral_group().order == 60


# 3 ---------------------------------------------------------------------------------


@criterion(3, "Taylor heads")
def test_criterion_03_taylor_heads(cat):
    v, w, v0, w0 = cat["V"], cat["W"], cat["V0"], cat["W0"]
    assert all(taylor_component(c, d).is_zero() for c in v for d in range(6))
    assert all(taylor_component(c, d).is_zero() for c in w for d in range(5))
    assert all(taylor_component(c, d).is_zero() for c in v0 for d in range(10))
    assert _head_equals(v, 6, parse_tex(VARPI_TEX), 768)
    assert _head_equals(w, 5, parse_tex(LAMBDA_TEX), 768)
    assert _head_equals(v0, 10, parse_tex(VARPI0_TEX), 23224320)
    q = cat["Q"]
    assert not q.is_zero()
    assert all(taylor_component(c, 9).scale(23224320) == qc.polynomial_part() for c, qc in zip(w0, q))


# 4 ---------------------------------------------------------------------------------


@criterion(4, "Helmholtz and solenoidality")
def test_criterion_04_helmholtz_and_solenoidality(cat):
    for name in ("V", "V0"):
        v = cat[name]
        assert vector_laplacian(v) == -v
        assert divergence(v).is_zero()
    rng = random.Random(20240607)
    for _ in range(50):
        f = random_trig_field(rng)
        lhs = curl(curl(f)) - gradient(divergence(f)) + vector_laplacian(f)
        assert lhs.is_zero()


# 5 ---------------------------------------------------------------------------------


@criterion(5, "Galois symmetry")
def test_criterion_05_tau_symmetry(cat):
    vx, wx = cat["V"][0], cat["W"][0]
    assert tau_swap(vx) == vx
    assert tau_swap(wx) == -wx


# 6 ---------------------------------------------------------------------------------


@criterion(6, "pipeline dimensions")
def test_criterion_06_pipeline_dimensions():
    spaces = run_pipeline()
    assert [s.dimension for s in spaces] == [11, 5, 3, 1]
    assert sorted(spaces[1].free) == list("abcdf")
    assert point_with_a(spaces[-1], 768) == I_PARAMS.scale(768)
    space = icosahedral_solution_space()
    assert space.dimension == 2
    assert space.contains(I_PARAMS) and space.contains(Y_PARAMS)
    assert icosahedral_solution_space(constants_only=True).dimension == 0


# 7 ---------------------------------------------------------------------------------


@criterion(7, "first integrals of M")
def test_criterion_07_first_integrals(cat):
    m = cat["M"]
    assert is_first_integral(sphere_integral(), m)
    assert is_first_integral(plane_integral(), m)
    # the same facts, recomputed in sympy from the transcribed head
    varpi = parse_tex(VARPI_TEX)
    field = [cyclic(varpi, k) for k in range(3)]
    phi = (1 + sp.sqrt(5)) / 2
    for w in (X**2 + Y**2 + Z**2, (phi**2 * X**2 - Y**2) * (phi**2 * Y**2 - Z**2) * (phi**2 * Z**2 - X**2)):
        flow = sum(sp.diff(w, s) * f for s, f in zip((X, Y, Z), field))
        assert sp.expand(flow) == 0


# 8 ---------------------------------------------------------------------------------


@criterion(8, "rational examples")
def test_criterion_08_rational_examples():
    b, f = sasakian_field(), averaged_field()
    assert is_beltrami(b)
    assert rf_equal(rf_curl(b), b.multiply(curl_multiplier()))
    assert rf_group_average(b, klein_group()).is_zero()
    cyc = generate_group([BETA])
    assert rf_equal(rf_group_average(b, cyc, gn("1/4")), f)
    assert rf_equal(rf_curl(f), f.multiply(curl_multiplier()))
    # F's first component is exactly the displayed U
    u = parse_tex(U_NUMERATOR_TEX) / (1 + X**2 + Y**2 + Z**2) ** 2
    fx = poly_to_sympy(f[0].num) / poly_to_sympy(f[0].den)
    assert sp.simplify(fx - u) == 0


# 9 ---------------------------------------------------------------------------------


@criterion(9, "zeros and dynamics")
def test_criterion_09_zeros_and_dynamics(cat):
    root = upsilon_roots(0.0, 20.0).first_positive_root()
    assert abs(root - 5.1625967944) < 1e-9
    assert abs(root - float(upsilon_root_oracle(5.16))) < 1e-9
    ups = upsilon_expr()
    assert restrict_to_line(cat["I"], (PHI, 1, 0)) == (ups.scale(PHI), ups, ups.scale(0))
    g = icosahedral_group()
    counts = [len(orbit_of_line(g, LINE_CLASSES[c])) for c in ("F", "V", "E")]
    assert counts == [12, 20, 30] and sum(counts) == 62
    assert fd_curl_residual(cat["I"], points=100) < 1e-6
    rep = rk4_convergence(cat["I"], x0=(5.0, 6.0, 7.0))
    assert 3.8 <= rep.order <= 4.2


# 10 --------------------------------------------------------------------------------


@criterion(10, "non-commutativity")
def test_criterion_10_non_commutativity(cat):
    br = lie_bracket(cat["N"], cat["Q"])
    assert not br.is_zero()
    w = nonzero_witness(br)
    assert w is not None and w.coefficient != 0
    comp = "xyz".index(w.component)
    assert br[comp].polynomial_part().terms[tuple(w.monomial)] == w.coefficient


# 11 --------------------------------------------------------------------------------


@criterion(11, "planar field D")
def test_criterion_11_planar_field(cat):
    d = cat["D"]
    for g in dihedral_generators():
        assert conjugate(d, g) == d
    assert vector_laplacian(d) == -d
    assert divergence(d).is_zero()
    assert all(taylor_component(c, k).is_zero() for c in d for k in range(2))
    x, y = sp.symbols("x y")
    for c, tex in zip(d, D_HEAD_TEX):
        head = taylor_component(c, 2)
        ours = sum(
            (sp.Rational(co.r.numerator, co.r.denominator) + sp.Rational(co.s.numerator, co.s.denominator) * sp.sqrt(3))
            * x ** e[0] * y ** e[1]
            for e, co in head.terms.items()
        )
        assert sp.expand(ours - sp.Rational(3, 8) * parse_tex(tex).subs({X: x, Y: y})) == 0


# 12 --------------------------------------------------------------------------------


def _dot(a, b):
    return sum(Fraction(p) * Fraction(q) for p, q in zip(a, b))


@criterion(12, "Helmholtz lemma")
def test_criterion_12_helmholtz_lemma():
    good, bad = helmholtz_lemma_cases(500)
    assert len(good) == 500 and len(bad) == 500
    for a, b, kind in good:
        assert _dot(a, b) == 0 and _dot(b, b) == 1
        assert helmholtz_residual(helmholtz_lemma_case(a, b, kind)).is_zero()
    for a, b, kind in bad:
        assert _dot(a, b) != 0 or _dot(b, b) != 1
        assert not helmholtz_residual(helmholtz_lemma_case(a, b, kind)).is_zero()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
