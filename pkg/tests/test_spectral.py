import numpy as np

from l1gft.graph import laplacian, random_geometric_graph
from l1gft.spectral import eigen_variation_check, laplacian_basis
from l1gft.variation import l2_variation


def test_two_vertex_analytic(two_vertex):
    basis = laplacian_basis(two_vertex)
    assert np.allclose(basis.eigenvalues, [0.0, 2.0], atol=1e-12)
    r = 1 / np.sqrt(2)
    assert np.allclose(basis.columns[:, 0], [r, r], atol=1e-12)
    assert np.allclose(basis.columns[:, 1], [r, -r], atol=1e-12)


def test_constant_eigenvector():
    g = random_geometric_graph(12, 0.5, 1)
    basis = laplacian_basis(g)
    assert abs(basis.eigenvalues[0]) < 1e-10
    assert np.allclose(basis.columns[:, 0], 1 / np.sqrt(12), atol=1e-8)


def test_k4_spectrum(k4):
    basis = laplacian_basis(k4)
    assert np.allclose(basis.eigenvalues, [0.0, 4.0, 4.0, 4.0], atol=1e-12)


def test_residual_and_orthonormality():
    g = random_geometric_graph(64, 0.5, 5)
    basis = laplacian_basis(g)
    lap = laplacian(g)
    lam_max = basis.eigenvalues[-1]
    for k in range(64):
        res = lap @ basis.columns[:, k] - basis.eigenvalues[k] * basis.columns[:, k]
        assert np.linalg.norm(res) <= 1e-8 * max(1.0, lam_max)
    gram = basis.columns.T @ basis.columns
    assert np.max(np.abs(gram - np.eye(64))) < 1e-9


def test_reconstruction():
    g = random_geometric_graph(32, 0.5, 6)
    basis = laplacian_basis(g)
    rebuilt = basis.columns @ np.diag(basis.eigenvalues) @ basis.columns.T
    bound = 1e-8 * max(1.0, basis.eigenvalues[-1])
    assert np.max(np.abs(rebuilt - laplacian(g))) <= bound


def test_eigen_variation_check():
    for seed, n in [(0, 4), (1, 64)]:
        g = random_geometric_graph(n, 0.5, seed)
        basis = laplacian_basis(g)
        assert eigen_variation_check(g, basis) <= 1e-8


def test_variational_ordering():
    g = random_geometric_graph(20, 0.5, 7)
    basis = laplacian_basis(g)
    vals = [l2_variation(g, basis.columns[:, k]) for k in range(20)]
    assert all(b >= a - 1e-8 for a, b in zip(vals, vals[1:]))


def test_sign_convention():
    g = random_geometric_graph(10, 0.5, 8)
    basis = laplacian_basis(g)
    for k in range(10):
        col = basis.columns[:, k]
        nz = np.nonzero(np.abs(col) > 1e-12)[0]
        assert col[nz[0]] > 0
