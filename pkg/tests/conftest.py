import numpy as np
import pytest

from l1gft.graph import Graph
from l1gft.greedy import MergeRecord, MergeTree


@pytest.fixture
def path3():
    """Path graph 1-2-3 with w12=1, w23=2."""
    return Graph([[0, 1, 0], [1, 0, 2], [0, 2, 0]])


@pytest.fixture
def k4():
    """Complete graph on 4 vertices with unit weights."""
    w = np.ones((4, 4)) - np.eye(4)
    return Graph(w)


@pytest.fixture
def two_vertex():
    return Graph([[0, 1], [1, 0]])


def make_example_tree():
    """The five-vertex merge sequence: {1},{3}; {2},{5}; {1,3},{4};
    {1,3,4},{2,5} (0-based below)."""
    return MergeTree(n=5, merges=(
        MergeRecord(k=5, group_a=(0,), group_b=(2,), mutual_weight=1.0),
        MergeRecord(k=4, group_a=(1,), group_b=(4,), mutual_weight=1.0),
        MergeRecord(k=3, group_a=(0, 2), group_b=(3,), mutual_weight=1.0),
        MergeRecord(k=2, group_a=(0, 2, 3), group_b=(1, 4), mutual_weight=1.0),
    ))


@pytest.fixture
def example_tree():
    return make_example_tree()


def chain_tree(n):
    """Degenerate left-deep merge tree, valid for any n; O(n) to build."""
    merges = []
    for k in range(n, 1, -1):
        j = n - k + 1
        merges.append(MergeRecord(k=k, group_a=tuple(range(j)),
                                  group_b=(j,), mutual_weight=1.0))
    return MergeTree(n=n, merges=tuple(merges))


def random_graph(n, seed, sigma=0.5):
    from l1gft.graph import random_geometric_graph

    return random_geometric_graph(n, sigma, seed)
