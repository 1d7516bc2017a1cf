"""BDFk 卷积求积时间推进测试"""

import math

import numpy as np
import pytest

from src.benchmark import build_example, convergence_rates
from src.quadrature import WeightSet, fractional_weights
from src.reference import eigenmode_solution
from src.spatial import ShiftedSolver, build_operator, sine_operator
from src.stepper import (
    ProblemSpec,
    history_convolution,
    run_corrected,
    run_scheme,
    run_standard,
    scheme_residual,
)
from src.utils.exceptions import ParameterError, SolverBlowUpError


@pytest.fixture(scope="module")
def cheb16():
    return build_operator("chebyshev", 16, 1.5)


def constant_forcing(value: np.ndarray):
    return lambda t: value


def test_zero_data_gives_zero_solution(cheb16):
    problem = ProblemSpec(alpha=1.5, gamma=0.5, sigma=0.5, T=1.0, g0=np.zeros(cheb16.size))
    for run in (run_standard, run_corrected):
        trajectory = run(problem, cheb16, 3, 10)
        assert len(trajectory) == 11
        assert not np.any(trajectory.values)


def test_initial_value_is_kept(cheb16):
    problem = build_example("a", 16, 3, alpha=1.5)
    trajectory = run_corrected(problem, cheb16, 3, 12)
    np.testing.assert_array_equal(trajectory[0], problem.g0)
    np.testing.assert_allclose(trajectory.times[-1], 1.0)
    assert trajectory.N == 12


def test_single_bdf1_step_closed_form():
    op = sine_operator(1, 2, 1.7)
    problem = ProblemSpec(alpha=1.7, gamma=0.4, sigma=0.5, T=0.1, g0=np.array([1.0]))
    trajectory = run_standard(problem, op, 1, 1)

    lam = op.eigenvalues[0]
    b0 = fractional_weights(1, 0.4, 0)[0]
    expected = math.exp(-0.05) * b0 / (b0 + 0.1 ** 0.4 * lam)
    assert trajectory.final[0] == pytest.approx(expected, rel=1e-14)


def test_bdf1_corrected_equals_standard(cheb16):
    problem = build_example("c", 16, 1, alpha=1.5)
    standard = run_standard(problem, cheb16, 1, 20)
    corrected = run_corrected(problem, cheb16, 1, 20)
    np.testing.assert_array_equal(standard.values, corrected.values)


def test_bdf2_correction_acts_on_first_step_only(cheb16):
    c = np.linspace(1.0, 2.0, cheb16.size)
    problem = ProblemSpec(alpha=1.5, gamma=0.6, sigma=0.5, T=1.0, g0=np.zeros(cheb16.size),
                          forcing=constant_forcing(c), f_derivs0=(c,))
    N = 8
    standard = run_standard(problem, cheb16, 2, N)
    corrected = run_corrected(problem, cheb16, 2, N)

    tau = 1.0 / N
    solver = ShiftedSolver(cheb16, tau ** -0.6 * fractional_weights(2, 0.6, 0)[0])
    np.testing.assert_allclose(corrected[1] - standard[1], solver.solve(0.5 * c), rtol=1e-12, atol=1e-14)

    # 修正轨迹在 n >= 2 时满足未修正的离散方程
    residual = scheme_residual(problem, cheb16, 2, corrected, corrected=False)
    assert residual[0] > 1e-3
    assert np.max(residual[1:]) <= 1e-10


def test_history_convolution_examples():
    weights = WeightSet.build(3, 0.6, 0.5, 0.1, 10)
    history = np.zeros((2, 4))
    np.testing.assert_array_equal(history_convolution(weights, history, 1), np.zeros(4))

    history[1] = 1.0
    expected = weights.scale * weights.q[1] * np.ones(4)
    np.testing.assert_allclose(history_convolution(weights, history, 2), expected, rtol=1e-15)


def test_history_convolution_matches_naive_sum():
    weights = WeightSet.build(4, 0.3, 0.5, 0.05, 10)
    history = np.random.default_rng(7).standard_normal((9, 5))
    n = 8
    naive = np.zeros(5)
    for j in range(1, n + 1):
        for i in range(5):
            naive[i] += weights.scale * weights.q[j] * history[n - j, i]
    np.testing.assert_allclose(history_convolution(weights, history, n), naive, rtol=0, atol=1e-13)


@pytest.mark.parametrize("n", [-1, 11, 12])
def test_history_convolution_index_errors(n):
    weights = WeightSet.build(2, 0.5, 0.0, 0.1, 10)
    history = np.zeros((11, 3))
    with pytest.raises(IndexError):
        history_convolution(weights, history, n)


def test_history_convolution_needs_history():
    weights = WeightSet.build(2, 0.5, 0.0, 0.1, 10)
    with pytest.raises(IndexError):
        history_convolution(weights, np.zeros((3, 2)), 5)


def test_sine_mode_stays_in_span():
    op = sine_operator(15, 16, 1.5)
    phi = op.mode(1)
    problem = ProblemSpec(alpha=1.5, gamma=0.6, sigma=0.5, T=1.0, g0=phi)
    trajectory = run_corrected(problem, op, 3, 40)
    for G in trajectory.values:
        projection = (phi @ G) / (phi @ phi) * phi
        assert np.linalg.norm(G - projection) <= 1e-12 * np.linalg.norm(G)


@pytest.mark.parametrize("scheme", ["standard", "corrected"])
@pytest.mark.parametrize("name", ["a", "b", "c"])
def test_plug_back_residual(cheb16, name, scheme):
    problem = build_example(name, 16, 4, alpha=1.5, gamma=0.7)
    trajectory = run_scheme(problem, cheb16, scheme, 4, 32)
    residual = scheme_residual(problem, cheb16, 4, trajectory, corrected=(scheme == "corrected"))
    assert residual.shape == (32,)
    assert np.max(residual) <= 1e-9


def test_eigenmode_bdf3_accuracy():
    op = sine_operator(7, 8, 1.3)
    phi = op.mode(1)
    problem = ProblemSpec(alpha=1.3, gamma=0.7, sigma=0.5, T=1.0, g0=phi)
    exact = eigenmode_solution(op.eigenvalues[0], 0.7, 0.5, 1.0) * phi
    final = run_corrected(problem, op, 3, 320).final
    assert np.max(np.abs(final - exact)) <= 1e-6 * np.max(np.abs(exact))


@pytest.mark.parametrize("alpha, gamma", [(1.7, 0.3), (1.3, 0.7)])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_eigenmode_convergence_order(k, alpha, gamma):
    op = sine_operator(7, 8, alpha)
    phi = op.mode(1)
    problem = ProblemSpec(alpha=alpha, gamma=gamma, sigma=0.5, T=1.0, g0=phi)
    exact = eigenmode_solution(op.eigenvalues[0], gamma, 0.5, 1.0) * phi

    errors = [np.max(np.abs(run_corrected(problem, op, k, N).final - exact)) for N in (40, 80, 160, 320)]
    rates = convergence_rates(errors)
    assert rates[-1] == pytest.approx(k, abs=0.2)


def test_missing_derivatives_rejected(cheb16):
    c = np.ones(cheb16.size)
    problem = ProblemSpec(alpha=1.5, gamma=0.5, sigma=0.5, T=1.0, g0=np.zeros(cheb16.size),
                          forcing=constant_forcing(c), f_derivs0=(c,))
    run_standard(problem, cheb16, 4, 8)
    with pytest.raises(ParameterError):
        run_corrected(problem, cheb16, 4, 8)


def test_alpha_mismatch_rejected(cheb16):
    problem = build_example("a", 16, 2, alpha=1.7)
    with pytest.raises(ParameterError):
        run_standard(problem, cheb16, 2, 8)


def test_too_few_steps_rejected(cheb16):
    problem = build_example("a", 16, 4, alpha=1.5)
    with pytest.raises(ParameterError):
        run_corrected(problem, cheb16, 4, 3)


def test_unknown_scheme_rejected(cheb16):
    problem = build_example("a", 16, 2, alpha=1.5)
    with pytest.raises(ParameterError, match="explicit"):
        run_scheme(problem, cheb16, "explicit", 2, 8)


def test_non_finite_forcing_triggers_blow_up_guard(cheb16):
    nan = np.full(cheb16.size, np.nan)
    problem = ProblemSpec(alpha=1.5, gamma=0.5, sigma=0.5, T=1.0, g0=np.zeros(cheb16.size),
                          forcing=constant_forcing(nan), f_derivs0=(nan,))
    with pytest.raises(SolverBlowUpError):
        run_standard(problem, cheb16, 2, 4)


@pytest.mark.parametrize("field, value", [
    ("gamma", 1.0), ("alpha", 1.0), ("sigma", -0.5), ("T", 0.0),
])
def test_problem_spec_validation(field, value):
    values = dict(alpha=1.5, gamma=0.5, sigma=0.5, T=1.0, g0=np.zeros(3))
    values[field] = value
    with pytest.raises(ParameterError):
        ProblemSpec(**values)


def test_problem_spec_rejects_inconsistent_data():
    with pytest.raises(ParameterError):
        ProblemSpec(alpha=1.5, gamma=0.5, sigma=0.5, T=1.0, g0=np.array([1.0, np.nan]))
    with pytest.raises(ParameterError):
        ProblemSpec(alpha=1.5, gamma=0.5, sigma=0.5, T=1.0, g0=np.zeros(3), f_derivs0=(np.zeros(2),))
