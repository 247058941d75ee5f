"""Laplacian eigenbasis, the l2 comparison baseline."""

from dataclasses import dataclass

import numpy as np

from .graph import laplacian
from .variation import l2_variation


@dataclass(frozen=True)
class LaplacianBasis:
    eigenvalues: np.ndarray   # ascending, eigenvalues[0] ~ 0
    columns: np.ndarray       # orthonormal eigenvectors as columns


def laplacian_basis(g):
    """Full symmetric eigendecomposition of D - W, eigenvalues ascending.

    Sign convention: the first component of each eigenvector with magnitude
    above 1e-12 is made positive.
    """
    lam, vec = np.linalg.eigh(laplacian(g))
    order = np.argsort(lam, kind="stable")
    lam = lam[order]
    vec = vec[:, order]
    for k in range(vec.shape[1]):
        nz = np.nonzero(np.abs(vec[:, k]) > 1e-12)[0]
        if nz.size and vec[nz[0], k] < 0:
            vec[:, k] *= -1.0
    return LaplacianBasis(eigenvalues=lam, columns=vec)


def eigen_variation_check(g, basis):
    """Max over k of |x^T L x - lambda_k| / max(1, lambda_k); numerical
    self-test of the decomposition."""
    worst = 0.0
    for k in range(g.n):
        lam = basis.eigenvalues[k]
        err = abs(l2_variation(g, basis.columns[:, k]) - lam) / max(1.0, lam)
        worst = max(worst, err)
    return worst
