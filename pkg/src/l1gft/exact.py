"""Exact l1 Fourier basis for small graphs by critical-set enumeration.

Each step minimizes the l1 variation over unit vectors orthogonal to the
previously chosen columns.  The minimizer lives in a finite critical set:
for every vertex partition whose matrix M gives dim ker(U^T M) = 1, the
kernel direction pins the candidate signal up to sign.  Enumerating
partitions with at most k blocks therefore solves the step exactly.

Partitions are generated as restricted growth strings; block counts are
capped at k during generation, which keeps N = 10 tractable.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import GraphTooLarge, InfeasibleStep, NonOrthonormalBasis
from .piecewise import RANK_RTOL

DEFAULT_MAX_N = 10

# Two kernel-vector entries closer than this are treated as equal block
# values; such a candidate belongs to a coarser partition enumerated
# separately.
DEGENERATE_ATOL = 1e-10


@dataclass(frozen=True)
class CriticalPoint:
    """One representative of a +/- pair of feasible critical signals."""

    blocks: tuple        # value-ascending tuples of 0-based vertex indices
    signal: np.ndarray   # unit norm, first nonzero component positive
    variation: float
    canonical: tuple = field(compare=False)  # blocks ordered by min member


@dataclass(frozen=True)
class StepReport:
    k: int
    candidates: int
    winner_blocks: tuple
    variation: float


@dataclass(frozen=True)
class ExactL1Basis:
    columns: np.ndarray      # N x N, column k-1 = u_k
    variations: np.ndarray   # per-column l1 variation
    steps: tuple             # StepReport per k = 2..N


@lru_cache(maxsize=4)
def _partitions_by_block_count(n):
    """All set partitions of 0..n-1 as assignment vectors (block = index of
    first occurrence order), grouped by block count."""
    buckets = {}
    assign = np.zeros(n, dtype=np.uint8)

    def rec(i, used):
        if i == n:
            buckets.setdefault(used, []).append(assign.copy())
            return
        for b in range(used + 1):
            assign[i] = b
            rec(i + 1, max(used, b + 1))

    rec(1, 1)
    return {m: np.array(rows) for m, rows in buckets.items()}


def _check_constraint_matrix(g, u):
    u = np.atleast_2d(np.asarray(u, dtype=float))
    if u.shape[0] == 1 and g.n > 1:
        u = u.T
    if u.shape[0] != g.n:
        raise NonOrthonormalBasis(f"constraint matrix has {u.shape[0]} rows, "
                                  f"graph has {g.n} vertices")
    gram = u.T @ u
    if np.max(np.abs(gram - np.eye(u.shape[1]))) > 1e-8:
        raise NonOrthonormalBasis("constraint columns are not orthonormal")
    if np.max(np.abs(u[:, 0] - 1.0 / np.sqrt(g.n))) > 1e-8:
        raise NonOrthonormalBasis("first constraint column must be 1/sqrt(N)")
    return u


def enumerate_critical_set(g, u, max_n=DEFAULT_MAX_N):
    """All critical points of the step problem min S(x) s.t. U^T x = 0,
    ||x|| = 1, one representative per surviving partition matrix."""
    if g.n > max_n:
        raise GraphTooLarge(f"N={g.n} exceeds enumeration cap {max_n}")
    u = _check_constraint_matrix(g, u)
    n, k = g.n, u.shape[1] + 1
    w = g.weights
    by_m = _partitions_by_block_count(n)
    points = []
    for m in range(2, min(k, n) + 1):
        assigns = by_m.get(m)
        if assigns is None:
            continue
        # stack of partition matrices, one-hot over block ids
        mstack = (assigns[:, :, None] == np.arange(m)[None, None, :]).astype(float)
        t = np.einsum("nc,pnm->pcm", u, mstack)
        _, s, vh = np.linalg.svd(t)
        smax = s[:, 0]
        tol = RANK_RTOL * np.where(smax > 0, smax, 1.0)
        rank = (s > tol[:, None]).sum(axis=1)
        keep = (m - rank) == 1
        if not keep.any():
            continue
        a = vh[keep, -1, :]                      # unit kernel vectors
        gap = np.abs(a[:, :, None] - a[:, None, :])
        gap[:, np.arange(m), np.arange(m)] = np.inf
        distinct = gap.min(axis=(1, 2)) > DEGENERATE_ATOL
        if not distinct.any():
            continue
        a = a[distinct]
        sub = mstack[keep][distinct]
        kept_assigns = assigns[keep][distinct]
        x = np.einsum("pnm,pm->pn", sub, a)
        x /= np.linalg.norm(x, axis=1, keepdims=True)
        # sign: first component of magnitude > 1e-12 made positive
        for row in x:
            nz = np.nonzero(np.abs(row) > 1e-12)[0]
            if nz.size and row[nz[0]] < 0:
                row *= -1.0
        diffs = np.abs(x[:, :, None] - x[:, None, :])
        variations = 0.5 * np.einsum("ij,pij->p", w, diffs)
        for p in range(x.shape[0]):
            canonical = tuple(
                tuple(int(i) for i in np.nonzero(kept_assigns[p] == b)[0])
                for b in range(m)
            )
            vals = [x[p, block[0]] for block in canonical]
            order = np.argsort(vals)
            blocks = tuple(canonical[j] for j in order)
            points.append(CriticalPoint(
                blocks=blocks,
                signal=x[p],
                variation=float(variations[p]),
                canonical=canonical,
            ))
    if not points:
        raise InfeasibleStep("no critical points found (internal error)")
    return points


def solve_step(g, u, max_n=DEFAULT_MAX_N):
    """Minimum-variation critical point; ties within 1e-12 relative broken by
    lexicographically smallest canonical partition."""
    points = enumerate_critical_set(g, u, max_n=max_n)
    best = min(p.variation for p in points)
    near = [p for p in points if p.variation <= best + 1e-12 * max(best, 1.0)]
    return min(near, key=lambda p: p.canonical)


def exact_l1_basis(g, max_n=DEFAULT_MAX_N):
    """Iterate the step problem for k = 2..N starting from u_1 = 1/sqrt(N)."""
    if g.n > max_n:
        raise GraphTooLarge(f"N={g.n} exceeds enumeration cap {max_n}")
    n = g.n
    columns = np.zeros((n, n))
    columns[:, 0] = 1.0 / np.sqrt(n)
    variations = np.zeros(n)
    steps = []
    for k in range(2, n + 1):
        u = columns[:, : k - 1]
        points = enumerate_critical_set(g, u, max_n=max_n)
        best = min(p.variation for p in points)
        near = [p for p in points
                if p.variation <= best + 1e-12 * max(best, 1.0)]
        winner = min(near, key=lambda p: p.canonical)
        columns[:, k - 1] = winner.signal
        variations[k - 1] = winner.variation
        steps.append(StepReport(
            k=k,
            candidates=len(points),
            winner_blocks=winner.blocks,
            variation=winner.variation,
        ))
    return ExactL1Basis(columns=columns, variations=variations,
                        steps=tuple(steps))
