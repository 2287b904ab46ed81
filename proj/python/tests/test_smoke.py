import math

import pytest

import optpred


def test_chebyshev_values():
    assert optpred.cheb_T(2, 2.0) == pytest.approx(7.0)
    assert optpred.cheb_U(-1, 0.7) == 0


def test_hoel_levine_three_nodes():
    w = optpred.hoel_levine_weights([-1.0, 0.0, 1.0], 2.0)
    assert w == pytest.approx([1 / 7, 3 / 7, 3 / 7], rel=1e-14)
    assert optpred.lebesgue_at([-1.0, 0.0, 1.0], 2.0) == pytest.approx(7.0)
    assert optpred.christoffel([-1.0, 0.0, 1.0], w, 2, 2.0) == pytest.approx(49.0, rel=1e-12)


def test_imaginary_design_matches_optimizer():
    closed = optpred.imaginary_design(3, 1.0)
    found = optpred.optimize_support(3, 1j, seed=1)
    root = 1 / math.sqrt(2 * (1 + math.sqrt(2)))
    assert closed.nodes[2] == pytest.approx(root, abs=1e-12)
    assert found.nodes == pytest.approx(closed.nodes, abs=1e-6)
    assert found.K_value == pytest.approx(optpred.optimal_K(3, 1.0), rel=1e-8)
    assert found.certificate.certified


def test_design_json_round_trip():
    d = optpred.optimize_support(4, 1.5)
    back = optpred.Design.from_json(d.to_json())
    assert back.nodes == d.nodes
    assert back.certificate.sup_norm == pytest.approx(d.certificate.sup_norm, abs=1e-12)


def test_growth():
    assert optpred.growth_value(2, 1.0) == pytest.approx(3.4142136, rel=1e-7)
    lhs, rhs = optpred.growth_gap(6, 2.5)
    assert lhs == pytest.approx(rhs, rel=1e-9)
    q = optpred.q_poly(2, 1.0)
    assert abs(q(1j)) == pytest.approx(optpred.growth_value(2, 1.0))


def test_errors():
    with pytest.raises(optpred.DomainError):
        optpred.optimize_support(2, 0.5)
    with pytest.raises(optpred.InputError):
        optpred.make_design([0.5, -0.5], 2.0)
    assert issubclass(optpred.DomainError, optpred.Error)


def test_simulation():
    plan = optpred.RegressionPlan([-1.0, 0.0, 1.0], [100, 100, 100], 1.0, [0.0, 0.0, 1.0])
    est = optpred.mc_predictor_variance(plan, 2.0, replicates=20000, seed=3, threads=2)
    assert est.predicted == pytest.approx(0.19, rel=1e-12)
    assert est.rel_error < 0.05
    again = optpred.mc_predictor_variance(plan, 2.0, replicates=20000, seed=3, threads=1)
    assert again.empirical == est.empirical


def test_verify_pell():
    (result,) = optpred.verify("pell", 7)
    assert result["passed"]
    assert result["worst"] <= 1e-9
