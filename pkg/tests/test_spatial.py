"""Chebyshev 配置、分数阶算子与平移求解器测试"""

import numpy as np
import pytest

from src.spatial import (
    ShiftedSolver,
    build_operator,
    chebyshev_laplacian,
    fractional_power,
    sine_operator,
    solve_shifted,
)
from src.spatial.chebyshev import chebyshev_differentiation
from src.utils.exceptions import ParameterError, SpectralDecompositionError


def relative_error(actual, expected):
    return np.linalg.norm(actual - expected) / np.linalg.norm(expected)


def test_chebyshev_nodes_m4():
    nodes, L = chebyshev_laplacian(4)
    np.testing.assert_allclose(nodes, [np.sqrt(0.5), 0.0, -np.sqrt(0.5)], atol=1e-15)
    assert nodes[1] == 0.0
    assert L.shape == (3, 3)


def test_differentiation_matrix_is_exact_on_quadratics():
    x, D = chebyshev_differentiation(8)
    np.testing.assert_allclose(D @ np.ones_like(x), 0.0, atol=1e-13)
    np.testing.assert_allclose(D @ x ** 2, 2.0 * x, atol=1e-12)


def test_chebyshev_laplacian_lowest_eigenvalues():
    _, L = chebyshev_laplacian(32)
    op = fractional_power(L, 2.0)
    expected = (np.arange(1, 6) * np.pi / 2.0) ** 2
    np.testing.assert_allclose(op.base_eigenvalues[:5], expected, rtol=1e-8)
    assert op.base_eigenvalues[0] == pytest.approx(2.4674011, rel=1e-7)


def test_alpha_two_reproduces_laplacian():
    _, L = chebyshev_laplacian(32)
    op = fractional_power(L, 2.0)
    assert relative_error(op.matrix, L) <= 1e-10


def test_fractional_power_of_diagonal():
    op = fractional_power(np.diag([4.0, 9.0]), 1.5)
    np.testing.assert_allclose(op.matrix, np.diag([4.0 ** 0.75, 9.0 ** 0.75]), atol=1e-12)
    np.testing.assert_allclose(op.eigenvalues, [4.0 ** 0.75, 9.0 ** 0.75])
    assert op.M == 3


def test_operator_is_read_only():
    op = build_operator("chebyshev", 8, 1.5)
    with pytest.raises(ValueError):
        op.matrix[0, 0] = 0.0


@pytest.mark.parametrize("M", [16, 60])
def test_eigen_residual_small(M):
    op = build_operator("chebyshev", M, 1.7)
    assert op.eigen_residual() <= 1e-8
    assert np.all(np.diff(op.eigenvalues) >= 0.0)


def test_apply_matches_dense_product():
    op = build_operator("chebyshev", 32, 1.5)
    rng = np.random.default_rng(0)
    v = rng.standard_normal(op.size)
    dense = op.matrix @ v
    assert relative_error(op.apply(v), dense) <= 1e-9

    block = rng.standard_normal((op.size, 3))
    assert relative_error(op.apply(block), op.matrix @ block) <= 1e-9


def test_fractional_power_rejects_complex_eigenvalues():
    with pytest.raises(SpectralDecompositionError):
        fractional_power(np.array([[2.0, -1.0], [1.0, 2.0]]), 1.5)


def test_fractional_power_rejects_nonpositive_eigenvalues():
    with pytest.raises(SpectralDecompositionError):
        fractional_power(np.diag([-1.0, 2.0]), 1.5)


def test_fractional_power_rejects_defective_matrix():
    with pytest.raises(SpectralDecompositionError):
        fractional_power(np.array([[1.0, 1.0], [0.0, 1.0]]), 1.5)


@pytest.mark.parametrize("alpha", [1.0, 0.5, 2.5])
def test_fractional_power_rejects_alpha(alpha):
    with pytest.raises(ParameterError):
        fractional_power(np.diag([1.0, 2.0]), alpha)


def test_sine_operator_eigenpairs():
    op = sine_operator(7, 8, 1.7)
    expected = ((np.arange(1, 8) * np.pi / 2.0) ** 2) ** 0.85
    np.testing.assert_allclose(op.eigenvalues, expected, rtol=1e-14)
    assert op.nodes[3] == 0.0
    assert op.mode(1)[3] == pytest.approx(1.0, abs=1e-15)

    phi = op.mode(3)
    assert relative_error(op.matrix @ phi, op.eigenvalues[2] * phi) <= 1e-12
    assert op.eigen_residual() <= 1e-12


def test_sine_operator_truncated_modes():
    op = sine_operator(3, 16, 1.5)
    assert op.size == 15
    assert op.eigenvectors.shape == (15, 3)
    phi = op.mode(2)
    assert relative_error(op.apply(phi), op.eigenvalues[1] * phi) <= 1e-12


def test_sine_operator_rejects_mode_count():
    with pytest.raises(ParameterError):
        sine_operator(8, 8, 1.5)
    with pytest.raises(ParameterError):
        sine_operator(0, 8, 1.5)


def test_build_operator_rejects_unknown_backend():
    with pytest.raises(ParameterError):
        build_operator("fourier", 16, 1.5)


@pytest.mark.parametrize("M", [3, 2])
def test_chebyshev_laplacian_rejects_small_grid(M):
    with pytest.raises(ParameterError):
        chebyshev_laplacian(M)


def test_solve_shifted_scalar():
    op = fractional_power(np.array([[1.0]]), 2.0)
    np.testing.assert_allclose(solve_shifted(op, 1.0, np.array([2.0])), [1.0])


@pytest.mark.parametrize("backend, M", [
    ("chebyshev", 16), ("chebyshev", 60),
    ("sine", 16), ("sine", 60), ("sine", 128),
])
def test_solve_shifted_residual(backend, M):
    op = build_operator(backend, M, 1.5)
    mu = 10.0
    rng = np.random.default_rng(M)
    rhs = rng.standard_normal(op.size)
    u = ShiftedSolver(op, mu).solve(rhs)
    residual = mu * u + op.matrix @ u - rhs
    assert np.linalg.norm(residual) <= 1e-10 * np.linalg.norm(rhs)


@pytest.mark.parametrize("backend", ["chebyshev", "sine"])
def test_solve_shifted_round_trip(backend):
    op = build_operator(backend, 16, 1.5)
    mu = 10.0
    w = np.random.default_rng(1).standard_normal(op.size)
    u = solve_shifted(op, mu, mu * w + op.matrix @ w)
    assert relative_error(u, w) <= 1e-10


def test_solve_shifted_on_sine_mode():
    op = sine_operator(15, 16, 1.3)
    phi = op.mode(4)
    u = solve_shifted(op, 2.0, phi)
    np.testing.assert_allclose(u, phi / (2.0 + op.eigenvalues[3]), atol=1e-14)


def test_shifted_solver_rejects_bad_input():
    op = build_operator("sine", 8, 1.5)
    with pytest.raises(ParameterError):
        ShiftedSolver(op, 0.0)
    solver = ShiftedSolver(op, 1.0)
    with pytest.raises(ParameterError):
        solver.solve(np.ones(op.size + 1))
