import networkx as nx
import numpy as np
import pytest
import wixtree.trees.wiener as wiener_module
from wixtree.errors import WienerOverflow
from wixtree.trees import (canonical_code, closed_form_path, closed_form_star,
                           tree_from_edges, wiener_edges, wiener_pairwise)
from wixtree.trees.tree import bfs_distances as tree_bfs_distances
from wixtree.trees.tree import check_u64


def get_path(n):
    return tree_from_edges(n, [(i, i+1) for i in range(n-1)])


def get_star(n):
    return tree_from_edges(n, [(0, i) for i in range(1, n)])


def get_double_star():
    return tree_from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def from_nx(g):
    return tree_from_edges(g.number_of_nodes(), list(g.edges()))


@pytest.mark.parametrize('wiener', [wiener_pairwise, wiener_edges])
def test_wiener_examples(wiener):
    assert wiener(get_path(1)) == 0
    assert wiener(get_path(2)) == 1
    assert wiener(get_path(4)) == 10
    assert wiener(get_star(4)) == 9
    assert wiener(get_double_star()) == 29
    assert wiener(get_path(5)) == 20
    assert wiener(get_star(5)) == 16


def test_closed_forms():
    assert closed_form_path(1) == 0
    assert closed_form_path(2) == 1
    assert closed_form_path(4) == 10
    assert closed_form_path(5) == 20
    assert closed_form_star(1) == 0
    assert closed_form_star(2) == 1
    assert closed_form_star(4) == 9
    assert closed_form_star(5) == 16
    for n in range(1, 60):
        assert closed_form_path(n) == wiener_edges(get_path(n))
        assert closed_form_star(n) == wiener_edges(get_star(n))
    with pytest.raises(ValueError):
        closed_form_path(0)
    with pytest.raises(ValueError):
        closed_form_star(-1)


def test_overflow():
    assert check_u64(2**64 - 1) == 2**64 - 1
    with pytest.raises(WienerOverflow):
        check_u64(2**64)
    with pytest.raises(OverflowError):
        check_u64(-1)
    # The largest supported path still fits
    assert closed_form_path(200000) < 2**64


def test_wiener_dual_agreement():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n = int(rng.integers(3, 201))
        seq = [int(i) for i in rng.integers(0, n, n-2)]
        t = from_nx(nx.from_prufer_sequence(seq))
        assert wiener_pairwise(t) == wiener_edges(t)


def test_wiener_vs_networkx():
    rng = np.random.default_rng(99)
    for _ in range(20):
        n = int(rng.integers(3, 60))
        g = nx.from_prufer_sequence([int(i) for i in rng.integers(0, n,
                                                                  n-2)])
        assert wiener_edges(from_nx(g)) == int(nx.wiener_index(g))


@pytest.mark.parametrize('n', range(3, 10))
def test_star_path_bounds(n):
    # The star has the smallest and the path the largest Wiener index
    values = [wiener_edges(from_nx(g)) for g in nx.nonisomorphic_trees(n)]
    assert min(values) == closed_form_star(n)
    assert max(values) == closed_form_path(n)


def test_isomorphism_invariance():
    rng = np.random.default_rng(3)
    for g in nx.nonisomorphic_trees(8):
        t = from_nx(g)
        perm = rng.permutation(8)
        t2 = tree_from_edges(8, [(perm[u], perm[v]) for u, v in t.edges])
        assert canonical_code(t) == canonical_code(t2)
        assert wiener_edges(t) == wiener_edges(t2)
        assert wiener_pairwise(t) == wiener_pairwise(t2)


def record_blocks(monkeypatch):
    # Number of distances held by each breadth-first block
    sizes = []

    def bfs_distances(t, indices=None):
        d = tree_bfs_distances(t, indices=indices)
        sizes.append(d.size)
        return d

    monkeypatch.setattr(wiener_module, 'bfs_distances', bfs_distances)
    return sizes


@pytest.mark.parametrize('chunk,n', [(1000, 300), (7, 50), (1, 20)])
def test_pairwise_blocks(monkeypatch, chunk, n):
    sizes = record_blocks(monkeypatch)
    monkeypatch.setattr(wiener_module, 'PAIRWISE_CHUNK', chunk)
    assert wiener_pairwise(get_path(n)) == closed_form_path(n)
    assert sum(sizes) == n * n
    assert max(sizes) <= max(chunk, n)


def test_pairwise_memory(monkeypatch):
    # A dense 4000 x 4000 matrix would hold 16M distances
    n = 4000
    sizes = record_blocks(monkeypatch)
    assert wiener_pairwise(get_path(n)) == closed_form_path(n)
    assert max(sizes) <= wiener_module.PAIRWISE_CHUNK
    assert len(sizes) > 1
    assert wiener_pairwise(get_star(n)) == closed_form_star(n)
