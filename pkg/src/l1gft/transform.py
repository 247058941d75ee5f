"""Forward/inverse transforms, the O(N) fast greedy transform, n-term
approximation curves, and the simulated test signal."""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidParameter, NonOrthonormalBasis, ZeroSignal

ORTHONORMALITY_TOL = 1e-9


@dataclass(frozen=True)
class SpectralCoefficients:
    values: np.ndarray
    basis_tag: str = "custom"


@dataclass(frozen=True)
class ApproximationCurve:
    errors: np.ndarray   # epsilon_0 .. epsilon_N
    order: np.ndarray    # basis column indices by descending |coefficient|


class MultiplyCounter:
    """Counts scalar multiplications performed by the fast transform."""

    def __init__(self):
        self.count = 0

    def add(self, n):
        self.count += n


def _check_orthonormal(basis, n):
    basis = np.asarray(basis, dtype=float)
    if basis.shape != (n, n):
        raise DimensionMismatch(f"basis shape {basis.shape} != ({n},{n})")
    gram = basis.T @ basis
    if np.max(np.abs(gram - np.eye(n))) > ORTHONORMALITY_TOL:
        raise NonOrthonormalBasis("basis columns are not orthonormal")
    return basis


def naive_transform(basis, x, basis_tag="custom"):
    """Analysis by dense matrix product B^T x."""
    x = np.asarray(x, dtype=float)
    basis = _check_orthonormal(basis, x.shape[0])
    return SpectralCoefficients(values=basis.T @ x, basis_tag=basis_tag)


def inverse_transform(basis, coeffs):
    """Synthesis B c; round-trips naive_transform."""
    values = coeffs.values if isinstance(coeffs, SpectralCoefficients) else np.asarray(coeffs)
    basis = np.asarray(basis, dtype=float)
    if basis.shape[1] != values.shape[0]:
        raise DimensionMismatch("coefficient length does not match basis")
    return basis @ values


def fast_greedy_transform(tree, x, counter=None):
    """Greedy-basis analysis via the merge tree in O(N) multiplications.

    Group sums are accumulated bottom-up (the merged group's sum is the sum
    of its children's sums, never re-summed from members), so each merge
    costs exactly two multiplications: a_k * alpha_k + b_k * beta_k.
    """
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    if tree.n != n:
        raise DimensionMismatch(f"signal length {n} != tree size {tree.n}")
    sums = {i: x[i] for i in range(n)}   # group label -> sum over members
    out = np.zeros(n)
    for rec in tree.merges:
        na, nb = len(rec.group_a), len(rec.group_b)
        t = 1.0 / np.sqrt(na * nb * (na + nb))
        a, b = -t * nb, t * na
        la, lb = rec.group_a[0], rec.group_b[0]
        alpha, beta = sums[la], sums[lb]
        out[rec.k - 1] = a * alpha + b * beta
        if counter is not None:
            counter.add(2)
        sums[min(la, lb)] = alpha + beta
        if max(la, lb) != min(la, lb):
            sums.pop(max(la, lb), None)
    out[0] = sums[0] / np.sqrt(n) if n > 1 else x[0]
    if counter is not None:
        counter.add(1)
    return SpectralCoefficients(values=out, basis_tag="greedy")


def n_term_curve(basis, x, basis_tag="custom"):
    """Relative n-term approximation errors under an orthonormal basis.

    epsilon_n is computed from the tail coefficient energy (valid by
    Parseval); coefficients are kept in descending magnitude, ties broken by
    ascending basis index.
    """
    coeffs = naive_transform(basis, x, basis_tag=basis_tag)
    return curve_from_coefficients(coeffs, np.linalg.norm(x))


def curve_from_coefficients(coeffs, signal_norm):
    values = coeffs.values if isinstance(coeffs, SpectralCoefficients) else np.asarray(coeffs)
    if signal_norm <= 0.0:
        raise ZeroSignal("cannot build an approximation curve for a zero signal")
    n = values.shape[0]
    order = np.lexsort((np.arange(n), -np.abs(values)))
    sq = values[order] ** 2
    tail = np.concatenate([np.cumsum(sq[::-1])[::-1], [0.0]])
    errors = np.sqrt(np.maximum(tail, 0.0)) / signal_norm
    return ApproximationCurve(errors=errors, order=order)


def simulated_signal(spectrum, mu, rng_seed):
    """Random smooth signal with Laplacian-basis coefficients
    rand_k / (1 + mu * lambda_k), rand uniform on [-1, 1]."""
    if mu <= 0:
        raise InvalidParameter("need mu > 0")
    rng = np.random.default_rng(rng_seed)
    n = spectrum.eigenvalues.shape[0]
    coeffs = rng.uniform(-1.0, 1.0, size=n) / (1.0 + mu * spectrum.eigenvalues)
    return spectrum.columns @ coeffs
