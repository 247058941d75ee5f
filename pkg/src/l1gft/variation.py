"""Signal variation functionals and the relative-error metrics."""

import numpy as np

from .errors import DimensionMismatch, ParseError, ZeroReferenceVariation


def _check_signal(g, x):
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != g.n:
        raise DimensionMismatch(f"signal length {x.shape} != graph size {g.n}")
    return x


def l1_variation(g, x):
    """Weighted sum of absolute differences over edges:
    sum_{i<j} w_ij |x_i - x_j|."""
    x = _check_signal(g, x)
    iu, ju, w = g.edges()
    return float(np.sum(w * np.abs(x[iu] - x[ju])))


def l2_variation(g, x):
    """Laplacian quadratic form, computed edgewise:
    sum_{i<j} w_ij (x_i - x_j)^2."""
    x = _check_signal(g, x)
    iu, ju, w = g.edges()
    return float(np.sum(w * (x[iu] - x[ju]) ** 2))


def directed_variation(g, x):
    """Ordered-pair variation sum_{i,j} w_ij max(x_i - x_j, 0); equals
    l1_variation for symmetric weights."""
    x = _check_signal(g, x)
    diff = x[:, None] - x[None, :]
    return float(np.sum(g.weights * np.maximum(diff, 0.0)))


def relative_variation_error(g, candidate, reference):
    """(S(candidate) - S(reference)) / S(reference)."""
    s_ref = l1_variation(g, reference)
    if s_ref <= 0.0:
        raise ZeroReferenceVariation("reference signal has zero variation")
    return (l1_variation(g, candidate) - s_ref) / s_ref


def basis_variation_sum(g, basis):
    """Sum of l1 variations of the columns of an N x N basis matrix."""
    basis = np.asarray(basis, dtype=float)
    if basis.shape != (g.n, g.n):
        raise DimensionMismatch(f"basis shape {basis.shape} != ({g.n},{g.n})")
    iu, ju, w = g.edges()
    return float(np.sum(w[:, None] * np.abs(basis[iu] - basis[ju])))


def read_signal(path, n=None):
    """Read a signal CSV: one value per line, optional 'value' header."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if lines and lines[0].lower() == "value":
        lines = lines[1:]
    try:
        values = np.array([float(ln) for ln in lines])
    except ValueError as exc:
        raise ParseError(f"{path}: non-numeric signal value") from exc
    if n is not None and values.shape[0] != n:
        raise DimensionMismatch(
            f"{path}: signal has {values.shape[0]} values, expected {n}"
        )
    return values


def write_signal(x, path):
    with open(path, "w") as fh:
        fh.write("value\n")
        for v in np.asarray(x, dtype=float):
            fh.write(repr(float(v)) + "\n")
