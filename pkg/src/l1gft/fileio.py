"""CSV readers/writers for bases, eigenvalues, coefficients and curves."""

import numpy as np

from .errors import ParseError


def write_matrix(mat, path):
    """N rows x N columns, 17 significant digits (round-trip exact)."""
    mat = np.asarray(mat, dtype=float)
    with open(path, "w") as fh:
        for row in mat:
            fh.write(",".join(f"{v:.17g}" for v in row) + "\n")


def read_matrix(path):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    try:
        return np.array([[float(v) for v in ln.split(",")] for ln in lines])
    except ValueError as exc:
        raise ParseError(f"{path}: non-numeric matrix entry") from exc


def write_vector(vec, path, header=None):
    with open(path, "w") as fh:
        if header:
            fh.write(header + "\n")
        for v in np.asarray(vec, dtype=float):
            fh.write(f"{float(v):.17g}\n")


def write_curve(curve, path):
    """ApproximationCurve as 'n,epsilon' rows, n = 0..N."""
    with open(path, "w") as fh:
        fh.write("n,epsilon\n")
        for n, eps in enumerate(curve.errors):
            fh.write(f"{n},{eps:.17g}\n")


def read_curve(path):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if lines and lines[0].lower() == "n,epsilon":
        lines = lines[1:]
    try:
        pairs = [ln.split(",") for ln in lines]
        return np.array([float(b) for _, b in pairs])
    except ValueError as exc:
        raise ParseError(f"{path}: bad curve row") from exc
