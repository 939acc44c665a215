import networkx as nx
import numpy as np
import pytest
from wixtree.errors import (BadParity, IndexOutOfRange, NotAPath,
                            VertexOutOfRange)
from wixtree.trees import (DegreeSequence, build_greedy_caterpillar,
                           build_greedy_tree, centred_subpaths,
                           path_between, path_decompose, tree_from_edges)


def get_path(n):
    return tree_from_edges(n, [(i, i+1) for i in range(n-1)])


def get_spider():
    # Degrees {3,2}: legs of length 1, 1 and 2
    return build_greedy_caterpillar(DegreeSequence((3, 2)))


def get_random_tree(n, rng):
    g = nx.from_prufer_sequence([int(i) for i in rng.integers(0, n, n-2)])
    return tree_from_edges(n, list(g.edges()))


def test_decompose_path():
    d = path_decompose(get_path(4), [0, 1, 2, 3], False)
    assert not d.has_z
    assert d.z is None
    # Equal sizes: x_1 is the vertex with the smaller id
    assert d.x == (1, 0)
    assert d.y == (2, 3)
    assert list(d.sizes_x) == [1, 1]
    assert list(d.sizes_y) == [1, 1]
    assert d.path == (3, 2, 1, 0)
    for v in range(4):
        assert d.component(v) == {v}


def test_decompose_spider():
    t = get_spider()
    assert t.edges == ((0, 1), (0, 2), (0, 3), (1, 4))
    d = path_decompose(t, [2, 0, 1, 4], False)
    assert d.x == (0, 2)
    assert d.y == (1, 4)
    assert list(d.sizes_x) == [2, 1]
    assert list(d.sizes_y) == [1, 1]
    assert d.component(0) == {0, 3}
    assert d.size_x(1) == 2
    assert d.tail_x(1) == 1
    assert d.tail_y(0) == 2
    assert d.sizes_x.sum() + d.sizes_y.sum() == t.n


def test_decompose_greedy_tree():
    t = build_greedy_tree(DegreeSequence((4, 4, 4, 3, 3, 3, 3, 3, 3, 3,
                                          2, 2))).tree
    # Leaf 15 hangs from 5, a child of 1; leaf 21 from 8, a child of 2
    path = path_between(t, 15, 21)
    assert path == [15, 5, 1, 0, 2, 8, 21]
    d = path_decompose(t, path, True)
    assert d.z == 0
    assert d.x == (1, 5, 15)
    assert d.y == (2, 8, 21)
    assert list(d.sizes_x) == [7, 2, 1]
    assert list(d.sizes_y) == [6, 2, 1]
    # z keeps the root with the subtrees of its two other children
    assert d.component(0) == {0, 3, 4, 11, 12, 13, 14, 26}
    assert list(d.weights(3)) == [2, 4, 6]
    assert list(d.mirrored().weights(2)) == [2, 4]


def test_decompose_errors():
    t = get_path(5)
    with pytest.raises(BadParity):
        path_decompose(t, [0, 1, 2, 3], True)
    with pytest.raises(BadParity):
        path_decompose(t, [0, 1, 2], False)
    with pytest.raises(NotAPath):
        path_decompose(t, [0, 2], False)
    with pytest.raises(NotAPath):
        path_decompose(t, [0, 1, 0], True)
    with pytest.raises(NotAPath):
        path_decompose(t, [], False)
    with pytest.raises(VertexOutOfRange):
        path_decompose(t, [4, 5], False)

    d = path_decompose(t, [0, 1, 2, 3, 4], True)
    with pytest.raises(IndexOutOfRange):
        d.size_x(0)
    with pytest.raises(IndexOutOfRange):
        d.size_y(3)
    with pytest.raises(IndexOutOfRange):
        d.tail_x(-1)
    assert d.tail_x(2) == 0


def test_mirrored():
    d = path_decompose(get_spider(), [2, 0, 1, 4], False)
    m = d.mirrored()
    assert (m.x, m.y) == (d.y, d.x)
    assert list(m.sizes_x) == list(d.sizes_y)
    assert m.mirrored() == d


def test_decompose_partition():
    rng = np.random.default_rng(314)
    for _ in range(100):
        t = get_random_tree(int(rng.integers(3, 40)), rng)
        u, v = rng.choice(t.n, size=2, replace=False)
        path = path_between(t, int(u), int(v))
        d = path_decompose(t, path, len(path) % 2 == 1)
        comps = [d.component(w) for w in path]
        # Disjoint, covering, each one holding its own path vertex only
        assert sum(len(c) for c in comps) == t.n
        assert set().union(*comps) == set(range(t.n))
        for w, c in zip(path, comps):
            assert w in c
            assert len(c & set(path)) == 1
            assert d.component_size(w) == len(c)
        assert d.size_x(1) >= d.size_y(1)
        for k in range(len(d.x) + 1):
            assert d.tail_x(k) == sum(len(d.component(w)) for w in d.x[k:])
        assert abs(len(d.x) - len(d.y)) <= 1


def test_centred_subpaths():
    subs = centred_subpaths([0, 1, 2, 3])
    assert subs == [([0, 1], False),
                    ([0, 1, 2], True), ([0, 1, 2, 3], False),
                    ([1, 2, 3], True),
                    ([2, 3], False)]
    assert centred_subpaths([5]) == []
    for sub, z_mode in centred_subpaths(list(range(7))):
        assert (len(sub) % 2 == 1) == z_mode
