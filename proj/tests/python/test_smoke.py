"""Smoke tests for the python bindings."""

import numpy as np
import pytest

import oscarprox as op


def test_prox_operators_match_worked_example():
    params = op.OscarParams(0.0, 1.0)
    v = np.array([3.0, 2.9])
    np.testing.assert_allclose(op.oscar_gpo(v, params), [2.45, 2.45])
    np.testing.assert_allclose(op.oscar_apo(v, params), [2.0, 2.9])
    oracle = op.brute_force_prox_oracle(v, params)
    np.testing.assert_allclose(op.oscar_gpo(v, params), oracle, atol=1e-12)


def test_soft_threshold_and_weights():
    np.testing.assert_allclose(
        op.soft_threshold(np.array([3.0, -1.0, 0.5]), 1.0), [2.0, 0.0, 0.0]
    )
    w = op.weight_vector(3, op.OscarParams(0.1, 0.01))
    np.testing.assert_allclose(w, [0.12, 0.11, 0.10])


def test_oscar_value_forms_agree():
    rng = np.random.default_rng(0)
    x = rng.uniform(-5, 5, size=50)
    params = op.OscarParams(0.3, 0.02)
    assert op.oscar_value(x, params) == pytest.approx(
        op.oscar_value_pairwise(x, params), rel=1e-12
    )


def test_generated_instance_is_deterministic():
    spec = op.ExperimentSpec()
    spec.n = 200
    spec.m = 100
    spec.seed = 7
    first = op.make_instance(spec)
    second = op.make_instance(spec)
    np.testing.assert_array_equal(first.x_true, second.x_true)
    np.testing.assert_array_equal(np.asarray(first.A), np.asarray(second.A))
    np.testing.assert_array_equal(first.y, second.y)
    assert np.count_nonzero(first.x_true) == 60


def test_solver_recovers_small_instance():
    spec = op.ExperimentSpec()
    spec.n = 200
    spec.m = 180  # comfortably inside the l1 recovery regime for 30% density
    spec.seed = 3
    inst = op.make_instance(spec)

    config = op.SolverConfig()
    config.params = spec.params
    config.tol = 0.01
    config.ground_truth = inst.x_true
    run = op.solve(op.SolverKind.FISTA, inst.A, inst.y, config)
    assert run.converged
    metrics = op.compute_metrics(inst.x_true, run.x_final, run)
    assert metrics.mae < 1.0
    assert len(run.objective_trace) == run.iterations + 1
    assert len(run.mae_trace) == run.iterations + 1


def test_apo_condition_and_errors():
    assert op.apo_condition_holds(np.array([4.0, 1.0]), op.OscarParams(0.0, 2.0))
    assert not op.apo_condition_holds(np.array([3.0, 2.9]), op.OscarParams(0.0, 1.0))
    with pytest.raises(ValueError):
        op.oscar_gpo(np.array([1.0]), op.OscarParams(-1.0, 0.0))
    with pytest.raises(ValueError):
        op.brute_force_prox_oracle(np.zeros(13), op.OscarParams(0.1, 0.1))
