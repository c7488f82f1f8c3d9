import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings as hsettings, strategies as st
from numpy.testing import assert_allclose

from turan.core.config import settings
from turan.core.errors import GuardExceededError, PreconditionError
from turan.modules.families import build_named, complete
from turan.modules.hypergraph import Hypergraph, SetFamily, blow_up, generate
from turan.modules.lagrangian import (
    WeightVector,
    default_options,
    derive_critical_values,
    dominate_reduce,
    dominates,
    evaluate_named,
    exact_catalog_check,
    kkt_residual,
    lagrange_multiplier,
    lagrangian,
    maximize,
    poly_eval,
    poly_grad,
    poly_hessian,
    project_simplex,
    symbolic_lagrangian,
    symmetric_average,
    theorem_gap,
)


def test_weight_vector_validates():
    with pytest.raises(ValueError):
        WeightVector(np.array([0.5, 0.6]))
    with pytest.raises(ValueError):
        WeightVector(np.array([1.5, -0.5]))
    w = WeightVector.uniform(5, on=[1, 2])
    assert w.support() == [1, 2]


def test_poly_eval_uniform(k53):
    x = np.full(5, 0.2)
    assert math.isclose(poly_eval(k53, x), 10 / 125)
    assert_allclose(poly_grad(k53, x), np.full(5, 6 * 0.04))
    assert lagrange_multiplier(k53, x) == pytest.approx(3 * 0.08)
    assert kkt_residual(k53, x) < 1e-15


def test_poly_on_set_family():
    fam = SetFamily(3, ((1,), (2, 3)))
    x = np.array([0.5, 0.25, 0.25])
    assert poly_eval(fam, x) == pytest.approx(0.5 + 0.0625)
    assert_allclose(poly_grad(fam, x), [1.0, 0.25, 0.25])


@hsettings(max_examples=25, deadline=None)
@given(st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=6, max_size=6))
def test_gradient_matches_finite_differences(raw):
    g = build_named("F6")
    x = np.array(raw) / sum(raw)
    grad = poly_grad(g, x)
    h = 1e-6
    for i in range(6):
        e = np.zeros(6)
        e[i] = h
        fd = (poly_eval(g, x + e) - poly_eval(g, x - e)) / (2 * h)
        assert abs(fd - grad[i]) <= 1e-6 * max(1.0, abs(grad[i]))


def test_hessian_is_symmetric():
    g = build_named("K5_3_minus")
    hess = poly_hessian(g, np.full(5, 0.2))
    assert_allclose(hess, hess.T)
    assert hess[0, 0] == 0


def test_project_simplex():
    p = project_simplex(np.array([0.3, 2.0, -1.0]))
    assert_allclose(p, [0.0, 1.0, 0.0])
    q = project_simplex(np.array([0.2, 0.2, 0.2]))
    assert_allclose(q.sum(), 1.0)
    assert_allclose(q, np.full(3, 1 / 3))


def test_k53_value_and_certificate(k53):
    result = maximize(k53, default_options(k53))
    assert abs(result.value - 2 / 25) <= 1e-8
    assert result.certified
    assert result.support == (1, 2, 3, 4, 5)
    assert_allclose(result.argmax.weights, np.full(5, 0.2), atol=1e-7)


def test_fano_support_is_one_edge(fano):
    result = maximize(fano, default_options(fano))
    assert abs(result.value - 1 / 27) <= 1e-8
    assert len(result.support) == 3
    assert result.support in fano.member_set


@pytest.mark.parametrize(
    "name,n,expected",
    [
        ("K5_3_minus", None, (13 * math.sqrt(13) - 35) / 162),
        ("F6", None, (9 + math.sqrt(6)) / 225),
        ("gen_K3", 5, 1 / 16),
        ("gen_K3", 3, 1 / 27),
        ("star", 7, 5 / 6 * 2 / 27),
        ("K6_3", None, 20 / 216),
    ],
)
def test_closed_forms(name, n, expected):
    family = build_named(name, n)
    assert abs(maximize(family, default_options(family)).value - expected) <= 1e-8


def test_t6_upper_bound():
    t6 = build_named("T6")
    assert maximize(t6, default_options(t6)).value <= 7 / 108 + 1e-9


def test_modes_agree(small_options):
    g = build_named("K5_3_minus")
    values = [
        maximize(g, small_options.replace(exhaustive=True)).value,
        maximize(g, small_options.replace(symmetric=True)).value,
        maximize(g, small_options).value,
    ]
    assert max(values) - min(values) <= 1e-9


def test_exhaustive_guard(small_options):
    with pytest.raises(GuardExceededError):
        maximize(complete(8, 3), small_options.replace(exhaustive=True))


def test_empty_family():
    assert lagrangian(Hypergraph(4, 3)) == 0.0
    with pytest.raises(PreconditionError):
        maximize(Hypergraph(4, 3))


def test_seed_reproducibility(small_options):
    g = build_named("gen_F4", 6)
    a = maximize(g, small_options)
    b = maximize(g, small_options)
    assert a.value == b.value
    assert a.argmax.to_list() == b.argmax.to_list()


def test_isolated_vertices_do_not_change_value(k53, small_options):
    padded = k53.with_isolated(3)
    assert abs(maximize(padded, small_options).value - 2 / 25) <= 1e-9


@pytest.mark.parametrize("t", [2, 3])
def test_blow_up_invariance(t, small_options):
    g = build_named("K5_3_minus")
    base = maximize(g, small_options.replace(symmetric=True)).value
    big = maximize(blow_up(g, t), small_options.replace(symmetric=True)).value
    assert abs(base - big) <= 1e-8


def test_monotone_under_subfamily(small_options):
    g = build_named("F6")
    sub = g.without_edge((1, 2, 3))
    assert maximize(sub, small_options).value <= maximize(g, small_options).value + 1e-9


def test_symmetric_average_keeps_value():
    g = build_named("K5_3_minus")
    x = np.array([0.1, 0.3, 0.2, 0.25, 0.15])
    avg = symmetric_average(g, x)
    assert poly_eval(g, avg) >= poly_eval(g, x) - 1e-12
    assert_allclose(avg.weights[:3], np.full(3, 0.2))


def test_domination():
    g = generate(9, 3, build_named("F4"))
    assert all(dominates(g, 5, j) for j in range(6, 10))
    assert not dominates(g, 6, 1)
    k53 = complete(5, 3)
    assert not any(dominates(k53, i, j) for i in range(1, 6) for j in range(1, 6) if i != j)
    with pytest.raises(ValueError):
        dominates(g, 2, 2)


def test_dominate_reduce_does_not_decrease():
    g = generate(8, 3, build_named("F4"))
    x = np.full(8, 1 / 8)
    reduced = dominate_reduce(g, x)
    assert poly_eval(g, reduced) >= poly_eval(g, x) - 1e-12
    assert set(reduced.support()) <= {1, 2, 3, 4, 5}


def test_symbolic_reduction():
    red = derive_critical_values("K5_3_minus")
    assert sp.simplify(red.maximum - (13 * sp.sqrt(13) - 35) / 162) == 0
    f6 = derive_critical_values("F6")
    assert sp.simplify(f6.maximum - (9 + sp.sqrt(6)) / 225) == 0
    assert len(f6.critical_values) == 2
    with pytest.raises(PreconditionError):
        symbolic_lagrangian(Hypergraph(5, 3, ((1, 2, 3), (3, 4, 5))))


def test_exact_catalog_check():
    check = exact_catalog_check("K5_3")
    assert check["passed"] and check["error"] <= 1e-8
    bound = exact_catalog_check("FF6")
    assert bound["passed"] and bound["kind"] == "bound"
    with pytest.raises(PreconditionError):
        exact_catalog_check("k333")


def test_evaluate_named_reports_gap():
    payload = evaluate_named("F7")
    assert payload["matches_expected"]
    assert payload["gap"] == pytest.approx(theorem_gap(1 / 27))
    assert payload["gap"] >= settings.THEOREM_GAP


def test_turan_graph_value(t53_10, small_options):
    value = maximize(t53_10, small_options.replace(symmetric=True)).value
    assert abs(value - 2 / 25) <= 1e-8
