"""Piecewise (level-set) representation of signals, the local linear form of
the l1 variation, and the nullity-1 necessary condition test.

A partition is held as an ordered list of disjoint tuples of 0-based vertex
indices covering 0..n-1; the implied partition matrix M has the blocks'
indicator vectors as columns.
"""

import json
from dataclasses import dataclass

import numpy as np

from .graph import block_weight
from .errors import RankDeficientU, SingleBlock

# Singular values below RANK_RTOL * s_max (or RANK_RTOL if all are zero)
# count as zero when computing rank/nullity.
RANK_RTOL = 1e-9


@dataclass(frozen=True)
class PiecewiseRepresentation:
    """Level sets of a signal: x = M a with strictly increasing values a."""

    blocks: tuple  # tuples of 0-based indices, ordered by ascending value
    values: np.ndarray

    @property
    def m(self):
        return len(self.blocks)


def piecewise_rep(x):
    """Group equal components (exact float equality) into value-ascending
    blocks.  Callers needing fuzzy grouping must quantize first."""
    x = np.asarray(x, dtype=float)
    levels, inverse = np.unique(x, return_inverse=True)
    blocks = tuple(
        tuple(int(i) for i in np.nonzero(inverse == j)[0])
        for j in range(levels.size)
    )
    return PiecewiseRepresentation(blocks=blocks, values=levels)


def reconstruct(rep, n):
    """Invert piecewise_rep: x = M a."""
    x = np.empty(n)
    for block, value in zip(rep.blocks, rep.values):
        x[list(block)] = value
    return x


def partition_matrix(blocks, n):
    """Dense N x m 0/1 matrix with one indicator column per block."""
    m = np.zeros((n, len(blocks)))
    for j, block in enumerate(blocks):
        m[list(block), j] = 1.0
    return m


def local_linear_form(g, blocks):
    """Coefficients f with S(Ma') = f.a' for a' near the block values:
    f_i = sum_{j<i} W(A_i,A_j) - sum_{j>i} W(A_i,A_j)."""
    m = len(blocks)
    if m < 2:
        raise SingleBlock("local linear form needs at least two blocks")
    cross = np.zeros((m, m))
    for i in range(m):
        for j in range(i + 1, m):
            cross[i, j] = cross[j, i] = block_weight(g, blocks[i], blocks[j])
    f = np.array(
        [cross[i, :i].sum() - cross[i, i + 1:].sum() for i in range(m)]
    )
    return f


def _nullity(mat):
    s = np.linalg.svd(mat, compute_uv=False)
    tol = RANK_RTOL * (s[0] if s.size and s[0] > 0 else 1.0)
    rank = int(np.sum(s > tol))
    return mat.shape[1] - rank


def kernel_dimension(u, blocks):
    """Nullity of U^T M for the partition matrix M built from ``blocks``."""
    u = np.atleast_2d(np.asarray(u, dtype=float))
    if u.ndim != 2:
        raise RankDeficientU("U must be a 2-d matrix")
    if u.shape[1] > 1:
        s = np.linalg.svd(u, compute_uv=False)
        if s[-1] <= RANK_RTOL * s[0]:
            raise RankDeficientU("U does not have full column rank")
    m = partition_matrix(blocks, u.shape[0])
    return _nullity(u.T @ m)


def satisfies_necessary_condition(u, blocks):
    """True iff dim ker(U^T M) == 1 (necessary for a local minimizer)."""
    return kernel_dimension(u, blocks) == 1


def partition_to_json(blocks):
    """Blocks as a JSON array of arrays of 1-based vertex indices."""
    return json.dumps([[i + 1 for i in block] for block in blocks])


def partition_from_json(text):
    return tuple(tuple(i - 1 for i in block) for block in json.loads(text))
