"""Graph representation, validation, weight aggregation and generation.

Vertices are 0-based inside the library; file formats (edge-list / dense CSV)
use 1-based indices.  Weight matrices are dense, symmetric, nonnegative with a
zero diagonal, and every loaded graph must be connected.
"""

from collections import deque

import numpy as np

from .errors import (
    AsymmetricWeights,
    DisconnectedGraph,
    IndexOutOfRange,
    InvalidParameter,
    NegativeWeight,
    ParseError,
    SelfLoop,
)


class Graph:
    """Connected undirected weighted graph over vertices ``0..n-1``.

    Immutable: the weight matrix is marked read-only at construction.
    """

    def __init__(self, weights):
        w = np.array(weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] < 1:
            raise ParseError("weight matrix must be square and non-empty")
        if not np.array_equal(w, w.T):
            raise AsymmetricWeights("weight matrix is not exactly symmetric")
        if np.any(np.diag(w) != 0.0):
            raise SelfLoop("nonzero diagonal entry (self-loop)")
        if np.any(w < 0.0):
            raise NegativeWeight("negative edge weight")
        _check_connected(w)
        w.setflags(write=False)
        self.weights = w
        self.n = w.shape[0]

    def edges(self):
        """Upper-triangle nonzero entries as (i, j, w) index arrays."""
        iu, ju = np.nonzero(np.triu(self.weights))
        return iu, ju, self.weights[iu, ju]

    def __repr__(self):
        return f"Graph(n={self.n})"


def _check_connected(w):
    n = w.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in np.nonzero(w[i] > 0.0)[0]:
            if not seen[j]:
                seen[j] = True
                queue.append(j)
    if not seen.all():
        raise DisconnectedGraph(
            f"graph has {n - int(seen.sum())} unreachable vertices"
        )


def load_graph(path, fmt="edge-list"):
    """Load a graph from CSV.

    ``edge-list``: rows ``i,j,w`` with 1-based vertex indices; each undirected
    edge appears once (duplicates in either orientation are an error); N is
    the largest index seen.  ``dense``: N rows of N comma-separated floats.
    """
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ParseError(f"{path}: empty file")
    if fmt == "edge-list":
        return _parse_edge_list(lines, path)
    if fmt == "dense":
        return _parse_dense(lines, path)
    raise InvalidParameter(f"unknown graph format: {fmt}")


def _parse_edge_list(lines, path):
    if lines and lines[0].lower().replace(" ", "") in ("i,j,w", "i,j,weight"):
        lines = lines[1:]
    triples = []
    for ln in lines:
        parts = ln.split(",")
        if len(parts) != 3:
            raise ParseError(f"{path}: bad edge row {ln!r}")
        try:
            i, j, w = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError as exc:
            raise ParseError(f"{path}: bad edge row {ln!r}") from exc
        if i < 1 or j < 1:
            raise IndexOutOfRange(f"{path}: vertex index < 1 in row {ln!r}")
        if i == j:
            raise SelfLoop(f"{path}: self-loop at vertex {i}")
        triples.append((i - 1, j - 1, w))
    n = 1 + max(max(i, j) for i, j, _ in triples)
    weights = np.zeros((n, n))
    seen = set()
    for i, j, w in triples:
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(f"{path}: duplicate edge {key[0] + 1},{key[1] + 1}")
        seen.add(key)
        weights[i, j] = w
        weights[j, i] = w
    return Graph(weights)


def _parse_dense(lines, path):
    rows = []
    for ln in lines:
        try:
            rows.append([float(v) for v in ln.split(",")])
        except ValueError as exc:
            raise ParseError(f"{path}: bad matrix row {ln!r}") from exc
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ParseError(f"{path}: matrix is not square")
    return Graph(np.array(rows))


def save_graph(g, path):
    """Write the dense CSV form; round-trips bit-exactly through load_graph."""
    with open(path, "w") as fh:
        for row in g.weights:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def block_weight(g, a, b):
    """Total weight between vertex sets ``a`` and ``b`` (0-based indices)."""
    a = np.asarray(list(a), dtype=int)
    b = np.asarray(list(b), dtype=int)
    if a.size == 0 or b.size == 0:
        return 0.0
    for idx in (a, b):
        if idx.min() < 0 or idx.max() >= g.n:
            raise IndexOutOfRange("vertex index outside 0..n-1")
    return float(g.weights[np.ix_(a, b)].sum())


def laplacian(g):
    """Combinatorial Laplacian D - W."""
    return np.diag(g.weights.sum(axis=1)) - g.weights


def random_geometric_graph(n, sigma, rng_seed):
    """Random geometric graph: n points uniform in the unit square,
    w_ij = exp(-||p_i - p_j||^2 / sigma^2).

    Deterministic per seed (numpy PCG64 generator).  ``rng_seed`` may be an
    int or any numpy seed material (e.g. a sequence of ints).
    """
    if n < 2:
        raise InvalidParameter("need n >= 2")
    if sigma <= 0:
        raise InvalidParameter("need sigma > 0")
    rng = np.random.default_rng(rng_seed)
    pts = rng.uniform(0.0, 1.0, size=(n, 2))
    d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2)
    w = np.exp(-d2 / sigma**2)
    np.fill_diagonal(w, 0.0)
    w = np.triu(w, 1)
    w = w + w.T
    return Graph(w)
