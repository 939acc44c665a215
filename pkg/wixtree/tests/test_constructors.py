import networkx as nx
import pytest
from wixtree.errors import InvalidDegreeSequence
from wixtree.oracle import all_degree_sequences
from wixtree.trees import (DegreeSequence, build_greedy_caterpillar,
                           build_greedy_tree, caterpillar_spine, centroid,
                           check_caterpillar, closed_form_path,
                           closed_form_star, degree_sequence_of,
                           get_level_profile, is_greedy_tree, root_at,
                           tree_from_edges, wiener_edges)

FIG_GREEDY = (4, 4, 4, 3, 3, 3, 3, 3, 3, 3, 2, 2)
FIG_CATERPILLAR = (6, 5, 5, 5, 5, 5, 4, 3, 3)


def get_path(n):
    return tree_from_edges(n, [(i, i+1) for i in range(n-1)])


def to_nx(t):
    g = nx.Graph()
    g.add_nodes_from(range(t.n))
    g.add_edges_from(t.edges)
    return g


def test_greedy_tree_figure():
    ds = DegreeSequence(FIG_GREEDY)
    rt = build_greedy_tree(ds)
    t = rt.tree
    assert rt.root == 0
    assert t.n == 27
    assert t.get_degree(0) == 4
    assert degree_sequence_of(t) == ds

    profile = get_level_profile(rt)
    assert profile.levels[0] == (4,)
    assert profile.levels[1] == (4, 4, 3, 3)
    assert profile.levels[2] == (3, 3, 3, 3, 3, 2, 2, 1, 1, 1)
    assert profile.levels[3] == (1,) * 12
    assert profile.is_non_increasing()
    # The degree 3 vertices of level 2 hang from the two degree 4 children
    assert sorted(rt.parent[v] for v in rt.get_levels()[2]
                  if t.get_degree(v) >= 3) == [1, 1, 1, 2, 2]

    leaf_heights = {rt.height[v] for v in t.get_leaves()}
    assert leaf_heights == {2, 3}
    assert len(t.get_leaves()) == 15

    check = is_greedy_tree(rt)
    assert check
    assert check.condition is None
    assert not check_caterpillar(t)


@pytest.mark.parametrize('n', range(3, 51))
def test_star_and_path(n):
    star = DegreeSequence((n - 1,))
    t = build_greedy_tree(star).tree
    c = build_greedy_caterpillar(star)
    assert t.n == c.n == n
    assert wiener_edges(t) == wiener_edges(c) == closed_form_star(n)

    path = DegreeSequence((2,) * (n - 2))
    t = build_greedy_tree(path).tree
    c = build_greedy_caterpillar(path)
    assert wiener_edges(t) == wiener_edges(c) == closed_form_path(n)
    assert nx.is_isomorphic(to_nx(t), to_nx(c))
    assert nx.is_isomorphic(to_nx(t), to_nx(get_path(n)))


def test_degenerate():
    for n in [1, 2]:
        ds = DegreeSequence((), n=n)
        assert build_greedy_tree(ds).tree.n == n
        assert build_greedy_caterpillar(ds).n == n
        assert check_caterpillar(build_greedy_caterpillar(ds))
        assert is_greedy_tree(build_greedy_tree(ds))
    assert wiener_edges(build_greedy_caterpillar(DegreeSequence(()))) == 1


def test_caterpillar_figure():
    ds = DegreeSequence(FIG_CATERPILLAR)
    t = build_greedy_caterpillar(ds)
    spine = [t.get_degree(v) for v in range(ds.k)]
    assert spine == [6, 5, 5, 4, 3, 3, 5, 5, 5]
    assert caterpillar_spine(t) in [list(range(9)), list(range(8, -1, -1))]
    assert degree_sequence_of(t) == ds
    assert check_caterpillar(t)


def test_caterpillar_small():
    t = build_greedy_caterpillar(DegreeSequence((3, 2)))
    assert t.edges == ((0, 1), (0, 2), (0, 3), (1, 4))
    t = build_greedy_caterpillar(DegreeSequence((5,)))
    assert t.edges == ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5))
    # Largest degrees at both ends
    t = build_greedy_caterpillar(DegreeSequence((3, 3, 2)))
    assert [t.get_degree(v) for v in range(3)] == [3, 2, 3]


def test_check_caterpillar():
    assert check_caterpillar(get_path(5))
    assert check_caterpillar(get_path(2))
    # Spine 3-3-2: largest degrees not at both ends
    t = tree_from_edges(7, [(0, 1), (1, 2), (0, 3), (0, 4), (1, 5), (2, 6)])
    assert caterpillar_spine(t) == [0, 1, 2]
    assert not check_caterpillar(t)
    # Not a caterpillar at all: the spine branches
    t = build_greedy_tree(DegreeSequence((3, 3, 3, 3))).tree
    assert caterpillar_spine(t) is None
    assert not check_caterpillar(t)


def test_is_greedy_tree_conditions():
    # Root of degree 1
    check = is_greedy_tree(root_at(get_path(4), 0))
    assert not check
    assert check.condition == 1
    assert check.witness[0] == 0

    # Star rooted at the centre
    star = tree_from_edges(5, [(0, i) for i in range(1, 5)])
    assert is_greedy_tree(root_at(star, 0))

    # Legs of lengths 1, 1 and 3: leaf heights 1 and 3
    t = tree_from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])
    check = is_greedy_tree(root_at(t, 0))
    assert check.condition == 2
    assert set(check.witness) == {1, 5} or set(check.witness) == {2, 5}

    # Vertex 4 (degree 3) below vertices of degree 2
    t = tree_from_edges(11, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6),
                             (4, 7), (4, 8), (5, 9), (6, 10)])
    check = is_greedy_tree(root_at(t, 0))
    assert check.condition == 3
    assert check.witness[1] == 4

    # d(1) > d(2) but 2 has a child of degree 2 and 1 only leaves
    t = tree_from_edges(9, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6),
                            (3, 7), (6, 8)])
    check = is_greedy_tree(root_at(t, 0))
    assert check.condition == 4
    assert check.witness == (4, 6)

    # d(4) > d(6) under different parents, but the sibling 5 of 4 is a
    # leaf while the sibling 7 of 6 has degree 2
    t = tree_from_edges(14, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6),
                             (2, 7), (3, 8), (3, 9), (4, 10), (4, 11),
                             (6, 12), (7, 13)])
    check = is_greedy_tree(root_at(t, 0))
    assert check.condition == 5
    assert check.witness in [(5, 7), (7, 4)]


def test_round_trips():
    for ds in all_degree_sequences(12):
        rt = build_greedy_tree(ds)
        c = build_greedy_caterpillar(ds)
        assert degree_sequence_of(rt.tree) == ds
        assert degree_sequence_of(c) == ds
        assert is_greedy_tree(rt)
        assert get_level_profile(rt).is_non_increasing()
        assert check_caterpillar(c)


def test_greedy_tree_at_centroid():
    # The characterization also holds with the tree rooted at a centroid
    for ds in all_degree_sequences(10, min_n=3):
        t = build_greedy_tree(ds).tree
        assert any(is_greedy_tree(root_at(t, c)) for c in centroid(t))


def test_invalid_input():
    with pytest.raises(InvalidDegreeSequence):
        build_greedy_tree([3, 3])
    with pytest.raises(InvalidDegreeSequence):
        build_greedy_caterpillar((3, 3))
