import itertools
import random

import numpy as np
import pytest

from icobeltrami.construct import (
    COLUMN_ORDER,
    STAGES,
    I_PARAMS,
    Y_PARAMS,
    AnsatzParams,
    ansatz_field,
    b_as_function_of_a,
    build_ansatz,
    constraint_stage,
    full_space,
    icosahedral_solution_space,
    icosahedrally_invariant,
    is_tau_symmetric,
    klein_invariant,
    linear_forms,
    point_with_a,
    run_pipeline,
    unit_vector,
)
from icobeltrami.dynamics import eval_field
from icobeltrami.exactnum import PHI, PHI_INV, SQRT5, gn
from icobeltrami.fields import closed_v, closed_v0, field_m
from icobeltrami.linalg import GAMMA, dot
from icobeltrami.trigexpr import TrigExpr, VectorField, curl, divergence, tau_swap, taylor_component


@pytest.fixture(scope="module")
def pipeline():
    return run_pipeline()


def test_linear_form_table():
    forms = linear_forms()
    assert len(forms) == 15
    assert forms["x0"].coeffs == (gn("1/2"), PHI / 2, PHI_INV / 2)
    assert unit_vector("y", 0) == (PHI_INV / 2, gn("1/2"), PHI / 2)


def test_linear_forms_are_unit_and_pairwise_non_parallel():
    vecs = [unit_vector(w, a) for w in "xyz" for a in range(4)]
    for v in vecs:
        assert dot(v, v) == 1
    for u, v in itertools.combinations(vecs, 2):
        assert dot(u, v) not in (1, -1)
    # numeric oracle: they are two-fold axes, so |cos| of any angle between
    # them is one of 0, 1/(2φ), 1/2, φ/2
    arr = np.array([[float(c) for c in v] for v in vecs])
    gram = np.abs(arr @ arr.T)
    off = gram[~np.eye(12, dtype=bool)]
    phi = (1 + 5**0.5) / 2
    assert np.allclose(np.unique(np.round(off, 12)), [0.0, 1 / (2 * phi), 0.5, phi / 2])


def test_zero_params_give_zero_generator():
    g = build_ansatz(AnsatzParams())
    assert g.is_zero()
    assert klein_invariant(g)


def test_ansatz_reproduces_closed_forms():
    assert ansatz_field(I_PARAMS) == closed_v()
    assert ansatz_field(Y_PARAMS) == closed_v0()


def test_doubled_parameters_double_the_head():
    v = ansatz_field(I_PARAMS.scale(2))
    m = field_m()
    for comp, mc in zip(v, m):
        assert taylor_component(comp, 6) == (mc.polynomial_part()).scale(gn("1/384"))


def test_pipeline_dimensions(pipeline):
    assert [s.dimension for s in pipeline] == [11, 5, 3, 1]
    assert [s.stage for s in pipeline] == ["initial", *STAGES]
    assert pipeline[1].free == list("abcdf")
    assert pipeline[-1].free == ["a"]
    assert COLUMN_ORDER[0] == 10


def test_stage_order_enforced():
    with pytest.raises(ValueError):
        constraint_stage(full_space(), "divergence_zero")
    with pytest.raises(ValueError):
        constraint_stage(full_space(), "no_such_stage")


def test_b_relation_and_pinned_point(pipeline):
    final = pipeline[-1]
    slope, intercept = b_as_function_of_a(final)
    assert slope == gn("-3/2") - SQRT5 / 2
    assert intercept == 1920 + 384 * SQRT5
    p = point_with_a(final, 768)
    assert p.b == slope * 768 + intercept == 768
    assert is_tau_symmetric(p)
    assert p == I_PARAMS.scale(768)
    assert final.contains(I_PARAMS.scale(768))


def test_every_stage_point_satisfies_its_constraints_numerically(pipeline):
    # float oracle: points drawn from the final space give divergence-free,
    # γ-invariant fields when evaluated directly
    final = pipeline[-1]
    rng = np.random.default_rng(2)
    for a in (1, -3, gn("5/7")):
        v = ansatz_field(point_with_a(final, a))
        g = np.array([[float(GAMMA[i, j]) for j in range(3)] for i in range(3)])
        for p in rng.uniform(-2, 2, (5, 3)):
            lhs = g.T @ eval_field(v, g @ p)
            assert np.allclose(lhs, eval_field(v, p), atol=1e-9)
        assert divergence(v).is_zero()


def test_homogeneous_solution_space():
    space = icosahedral_solution_space()
    assert space.dimension == 2
    assert space.contains(I_PARAMS)
    assert space.contains(Y_PARAMS)
    assert icosahedral_solution_space(constants_only=True).dimension == 0


def test_random_combinations_are_invariant_eigenfields():
    i = closed_v() + curl(closed_v())
    y = closed_v0() + curl(closed_v0())
    rng = random.Random(9)
    for _ in range(3):
        a = gn(f"{rng.randint(-20, 20)}/{rng.randint(1, 9)}")
        v = i + y.scale(a)
        assert curl(v) == v
        assert icosahedrally_invariant(v)
        even_x = closed_v()[0] + closed_v0()[0].scale(a)
        assert tau_swap(even_x) == even_x


def test_non_invariant_field_detected():
    e = TrigExpr.sin([1, 0, 0])
    zero = TrigExpr.zero(3)
    assert not icosahedrally_invariant(VectorField([zero, e, zero]))
