"""Greedy merge tree, Haar-like greedy basis, and the structural check.

Starting from singletons, repeatedly merge the two groups with the largest
mutual weight.  Merge k (for k = N down to 2) produces one basis column
supported on the merged pair: u_k = a_k 1_A + b_k 1_B with

    t_k = 1 / sqrt(|A||B|(|A|+|B|)),  a_k = -t_k |B|,  b_k = t_k |A|,

plus the constant column u_1 = 1/sqrt(N).
"""

import json
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InfeasibleStep, ParseError
from .piecewise import kernel_dimension

# Pairs within this relative distance of the maximal mutual weight count as
# ties and are broken by (min group label, max group label).
TIE_RTOL = 1e-12


@dataclass(frozen=True)
class MergeRecord:
    k: int               # step index, N down to 2; yields basis column k
    group_a: tuple       # 0-based members, smaller smallest-member first
    group_b: tuple
    mutual_weight: float


@dataclass(frozen=True)
class MergeTree:
    n: int
    merges: tuple        # MergeRecord for k = N, N-1, ..., 2


@dataclass(frozen=True)
class GreedyBasis:
    columns: np.ndarray   # N x N, column k-1 = u_k
    tree: MergeTree
    coefficients: tuple   # (a_k, b_k, t_k) per merge, same order as merges


def build_merge_tree(g):
    """N-1 greedy merges; deterministic (lexicographic tie-break on the
    groups' smallest original members)."""
    n = g.n
    if n == 1:
        return MergeTree(n=1, merges=())
    # group label = smallest original member; w holds mutual group weights
    w = g.weights.copy()
    members = {i: (i,) for i in range(n)}
    active = list(range(n))
    merges = []
    for k in range(n, 1, -1):
        idx = np.array(active)
        sub = w[np.ix_(idx, idx)]
        iu = np.triu_indices(len(idx), 1)
        vals = sub[iu]
        vmax = vals.max()
        if vmax <= 0.0:
            raise InfeasibleStep("no positive mutual weight left "
                                 "(disconnected graph slipped through)")
        tie = np.nonzero(vals >= vmax - TIE_RTOL * vmax)[0]
        # upper-triangle order over the sorted label array is already
        # lexicographic in (min label, max label)
        pos = tie[0]
        la, lb = int(idx[iu[0][pos]]), int(idx[iu[1][pos]])
        ga, gb = members[la], members[lb]
        merges.append(MergeRecord(
            k=k, group_a=ga, group_b=gb,
            mutual_weight=float(w[la, lb]),
        ))
        # merged group inherits the smaller label
        w[la, :] += w[lb, :]
        w[:, la] += w[:, lb]
        w[la, la] = 0.0
        members[la] = tuple(sorted(ga + gb))
        del members[lb]
        active.remove(lb)
    return MergeTree(n=n, merges=tuple(merges))


def greedy_basis_from_tree(tree):
    """Materialize the orthonormal greedy basis from a merge tree."""
    n = tree.n
    columns = np.zeros((n, n))
    columns[:, 0] = 1.0 / np.sqrt(n)
    coeffs = []
    for rec in tree.merges:
        na, nb = len(rec.group_a), len(rec.group_b)
        t = 1.0 / np.sqrt(na * nb * (na + nb))
        a, b = -t * nb, t * na
        columns[list(rec.group_a), rec.k - 1] = a
        columns[list(rec.group_b), rec.k - 1] = b
        coeffs.append((a, b, t))
    return GreedyBasis(columns=columns, tree=tree, coefficients=tuple(coeffs))


def partition_at_level(tree, k):
    """The partition tau_k: state after replaying merges N..k+1; has k
    groups.  Blocks ordered by smallest member."""
    groups = {i: (i,) for i in range(tree.n)}
    for rec in tree.merges:
        if rec.k <= k:
            break
        la, lb = rec.group_a[0], rec.group_b[0]
        groups[min(la, lb)] = tuple(sorted(rec.group_a + rec.group_b))
        del groups[max(la, lb)]
    return tuple(groups[label] for label in sorted(groups))


def verify_critical_structure(g, basis):
    """Check that for every k the partition tau_k with the merged pair listed
    first gives dim ker(U_{k-1}^T M) = 1."""
    tree = basis.tree
    for rec in tree.merges:
        k = rec.k
        others = [blk for blk in partition_at_level(tree, k)
                  if blk != rec.group_a and blk != rec.group_b]
        blocks = (rec.group_a, rec.group_b, *others)
        u = basis.columns[:, : k - 1]
        if kernel_dimension(u, blocks) != 1:
            return False
    return True


def tree_to_json(tree):
    return json.dumps({
        "n": tree.n,
        "merges": [
            {
                "k": rec.k,
                "A": [i + 1 for i in rec.group_a],
                "B": [i + 1 for i in rec.group_b],
                "w": rec.mutual_weight,
            }
            for rec in tree.merges
        ],
    })


def tree_from_json(text):
    try:
        obj = json.loads(text)
        merges = tuple(
            MergeRecord(
                k=rec["k"],
                group_a=tuple(i - 1 for i in rec["A"]),
                group_b=tuple(i - 1 for i in rec["B"]),
                mutual_weight=float(rec["w"]),
            )
            for rec in obj["merges"]
        )
        return MergeTree(n=int(obj["n"]), merges=merges)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad merge-tree JSON: {exc}") from exc


def validate_tree(g, tree):
    """Replay sanity: every record consumes two current groups and the
    replay ends in the single full-vertex group."""
    if tree.n != g.n:
        raise DimensionMismatch("tree size does not match graph")
    current = {(i,) for i in range(g.n)}
    for rec in tree.merges:
        if rec.group_a not in current or rec.group_b not in current:
            raise ParseError(f"merge at k={rec.k} references unknown groups")
        current.discard(rec.group_a)
        current.discard(rec.group_b)
        current.add(tuple(sorted(rec.group_a + rec.group_b)))
    if current != {tuple(range(g.n))}:
        raise ParseError("merge replay does not end in a single group")
