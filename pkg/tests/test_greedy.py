import numpy as np
import pytest

from conftest import chain_tree, make_example_tree
from l1gft.errors import ParseError
from l1gft.graph import Graph, random_geometric_graph
from l1gft.greedy import (
    build_merge_tree,
    greedy_basis_from_tree,
    partition_at_level,
    tree_from_json,
    tree_to_json,
    validate_tree,
    verify_critical_structure,
)
from l1gft.variation import l1_variation


def test_merge_trace_three_vertices(path3):
    tree = build_merge_tree(path3)
    assert [(r.group_a, r.group_b) for r in tree.merges] == [
        ((1,), (2,)), ((0,), (1, 2)),
    ]
    assert tree.merges[0].mutual_weight == 2.0
    assert tree.merges[1].mutual_weight == 1.0


def test_merge_trace_asymmetric():
    g = Graph([[0, 3, 0], [3, 0, 1], [0, 1, 0]])
    tree = build_merge_tree(g)
    assert (tree.merges[0].group_a, tree.merges[0].group_b) == ((0,), (1,))
    assert tree.merges[0].mutual_weight == 3.0
    assert tree.merges[1].mutual_weight == 1.0  # w13 + w23


def test_merge_single_edge(two_vertex):
    tree = build_merge_tree(two_vertex)
    assert len(tree.merges) == 1
    assert (tree.merges[0].group_a, tree.merges[0].group_b) == ((0,), (1,))


def test_partition_replay_example_tree(example_tree):
    assert partition_at_level(example_tree, 5) == (
        (0,), (1,), (2,), (3,), (4,))
    assert partition_at_level(example_tree, 4) == ((0, 2), (1,), (3,), (4,))
    assert partition_at_level(example_tree, 3) == ((0, 2), (1, 4), (3,))
    assert partition_at_level(example_tree, 2) == ((0, 2, 3), (1, 4))
    assert partition_at_level(example_tree, 1) == ((0, 1, 2, 3, 4),)


def test_example_tree_columns(example_tree):
    basis = greedy_basis_from_tree(example_tree)
    cols = basis.columns
    assert np.allclose(cols[:, 4], np.array([-1, 0, 1, 0, 0]) / np.sqrt(2),
                       atol=1e-12)
    assert np.allclose(cols[:, 3], np.array([0, -1, 0, 0, 1]) / np.sqrt(2),
                       atol=1e-12)
    assert np.allclose(cols[:, 2], np.array([-1, 0, -1, 2, 0]) / np.sqrt(6),
                       atol=1e-12)
    assert np.allclose(cols[:, 1], np.array([-2, 3, -2, -2, 3]) / np.sqrt(30),
                       atol=1e-12)
    assert np.allclose(cols[:, 0], np.ones(5) / np.sqrt(5), atol=1e-12)


def test_orthonormality_large():
    tree = chain_tree(1024)
    basis = greedy_basis_from_tree(tree)
    gram = basis.columns.T @ basis.columns
    assert np.max(np.abs(gram - np.eye(1024))) < 1e-10


def test_nesting_and_indicator_orthogonality():
    g = random_geometric_graph(16, 0.5, 3)
    basis = greedy_basis_from_tree(build_merge_tree(g))
    tree = basis.tree
    for k in range(1, 17):
        span = basis.columns[:, :k]
        for block in partition_at_level(tree, k):
            ind = np.zeros(16)
            ind[list(block)] = 1.0
            residual = ind - span @ (span.T @ ind)
            assert np.linalg.norm(residual) < 1e-9
    for rec in tree.merges:
        col = basis.columns[:, rec.k - 1]
        for block in partition_at_level(tree, rec.k - 1):
            ind = np.zeros(16)
            ind[list(block)] = 1.0
            assert abs(col @ ind) < 1e-12 * 4


def test_column_variations(path3):
    basis = greedy_basis_from_tree(build_merge_tree(path3))
    assert l1_variation(path3, basis.columns[:, 0]) == 0.0
    for k in range(1, 3):
        assert np.isfinite(l1_variation(path3, basis.columns[:, k]))


def test_verify_critical_structure_n2(two_vertex):
    basis = greedy_basis_from_tree(build_merge_tree(two_vertex))
    assert verify_critical_structure(two_vertex, basis)


def test_verify_critical_structure_random():
    for seed in range(10):
        g = random_geometric_graph(24, 0.5, seed)
        basis = greedy_basis_from_tree(build_merge_tree(g))
        assert verify_critical_structure(g, basis)


def test_verify_critical_structure_example_tree(example_tree):
    g = random_geometric_graph(5, 0.5, 8)
    basis = greedy_basis_from_tree(example_tree)
    assert verify_critical_structure(g, basis)


def test_determinism():
    g = random_geometric_graph(32, 0.5, 4)
    t1 = build_merge_tree(g)
    t2 = build_merge_tree(g)
    assert t1 == t2


def test_tie_break_unit_weights(k4):
    # all pairs tie at weight 1; lexicographically smallest pair first
    tree = build_merge_tree(k4)
    assert (tree.merges[0].group_a, tree.merges[0].group_b) == ((0,), (1,))


def test_tree_json_round_trip():
    tree = make_example_tree()
    text = tree_to_json(tree)
    assert tree_from_json(text) == tree
    with pytest.raises(ParseError):
        tree_from_json('{"n": 2}')


def test_validate_tree(example_tree):
    g = random_geometric_graph(5, 0.5, 8)
    validate_tree(g, example_tree)
    bad = chain_tree(5)
    validate_tree(g, bad)  # chain tree is structurally valid too
    with pytest.raises(ParseError):
        validate_tree(g, tree_from_json(
            '{"n": 5, "merges": [{"k": 5, "A": [1], "B": [1], "w": 1.0}]}'
        ))
