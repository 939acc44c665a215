#!/usr/bin/python
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import (breadth_first_order, connected_components,
                                  shortest_path)
from ..errors import (CycleDetected, Disconnected, DuplicateEdge,
                      InvalidDegreeSequence, SelfLoop, VertexOutOfRange,
                      WienerOverflow)


# sigma <= n^3 / 6 keeps every Wiener value well inside 64 bits
MAX_VERTICES = 200000
U64_MAX = 2**64 - 1


@dataclass(frozen=True)
class DegreeSequence:
    """
    Degrees of the non-leaf vertices of a tree, in non-increasing order. The
    number of leaves and the number of vertices are derived from them.

    The empty sequence is ambiguous: it describes both the single vertex
    (n=1) and the single edge (n=2). Pass `n` to pick one; it defaults to 2.
    """
    degrees: Tuple[int, ...]
    n: Optional[int] = None

    def __post_init__(self):
        try:
            degrees = tuple(int(d) for d in self.degrees)
        except (TypeError, ValueError):
            raise InvalidDegreeSequence(
                f"Degrees must be integers, got {self.degrees!r}")
        if any(d < 2 for d in degrees):
            raise InvalidDegreeSequence(
                f"Non-leaf degrees must be >= 2, got {degrees}")
        if any(d1 < d2 for d1, d2 in zip(degrees, degrees[1:])):
            raise InvalidDegreeSequence(
                f"Degrees must be sorted non-increasing, got {degrees}. "
                "Use DegreeSequence.from_list to normalize.")

        k = len(degrees)
        if k == 0:
            n = 2 if self.n is None else self.n
            if n not in (1, 2):
                raise InvalidDegreeSequence(
                    f"The empty sequence only describes n=1 or n=2, not {n}")
        else:
            n = k + sum(degrees) - 2 * k + 2
            if (self.n is not None) and (self.n != n):
                raise InvalidDegreeSequence(
                    f"Degrees {degrees} imply n={n}, not n={self.n}")
        if n > MAX_VERTICES:
            raise InvalidDegreeSequence(
                f"n={n} exceeds the supported maximum of {MAX_VERTICES}")
        object.__setattr__(self, 'degrees', degrees)
        object.__setattr__(self, 'n', n)

    @classmethod
    def from_list(cls, values, n=None):
        """Build a sequence from degrees given in any order."""
        try:
            values = sorted((int(v) for v in values), reverse=True)
        except (TypeError, ValueError):
            raise InvalidDegreeSequence(
                f"Degrees must be integers, got {values!r}")
        return cls(tuple(values), n=n)

    @property
    def k(self):
        return len(self.degrees)

    @property
    def leaf_count(self):
        return self.n - self.k

    def __str__(self):
        return '{' + ','.join(str(d) for d in self.degrees) + '}'


@dataclass(frozen=True)
class Tree:
    """
    Undirected tree on the vertices 0..n-1. Edges are stored as sorted
    (u, v) pairs with u < v. Build it through `tree_from_edges` so that it is
    validated.
    """
    n: int
    edges: Tuple[Tuple[int, int], ...]

    @cached_property
    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self):
        deg = np.zeros(self.n, dtype=np.int64)
        if self.edges:
            e = np.array(self.edges, dtype=np.int64)
            np.add.at(deg, e[:, 0], 1)
            np.add.at(deg, e[:, 1], 1)
        return deg

    @cached_property
    def csgraph(self):
        e = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        rows = np.concatenate([e[:, 0], e[:, 1]])
        cols = np.concatenate([e[:, 1], e[:, 0]])
        data = np.ones(rows.size, dtype=np.int8)
        return coo_matrix((data, (rows, cols)),
                          shape=(self.n, self.n)).tocsr()

    def get_neighbors(self, v):
        return self.adjacency[v]

    def get_degree(self, v):
        return int(self.degrees[v])

    def get_leaves(self):
        """Vertices of degree one (both vertices of the single edge)."""
        return [int(v) for v in np.flatnonzero(self.degrees == 1)]

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self._edge_set

    @cached_property
    def _edge_set(self):
        return frozenset(self.edges)

    def to_dict(self):
        return {'n': self.n, 'edges': [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, d):
        return tree_from_edges(d['n'], d['edges'])


@dataclass(frozen=True)
class RootedTree:
    """
    A tree together with a root. `parent[root]` is -1. Heights and subtree
    sizes are indexed by vertex; `order` is the breadth-first order from the
    root.
    """
    tree: Tree
    root: int
    parent: Tuple[int, ...]
    height: Tuple[int, ...]
    subtree_size: Tuple[int, ...]
    order: Tuple[int, ...]

    @property
    def n(self):
        return self.tree.n

    @cached_property
    def children(self):
        ch = [[] for _ in range(self.n)]
        for v in self.order[1:]:
            ch[self.parent[v]].append(v)
        return tuple(tuple(c) for c in ch)

    def get_children(self, v):
        return self.children[v]

    def get_levels(self):
        """Vertices grouped by height, each level in breadth-first order."""
        levels = []
        for v in self.order:
            h = self.height[v]
            if h == len(levels):
                levels.append([])
            levels[h].append(v)
        return levels

    def get_leaves(self):
        return self.tree.get_leaves()


def _check_vertex(n, v):
    if not (0 <= v < n):
        raise VertexOutOfRange(f"Vertex {v} out of range for n={n}")


def tree_from_edges(n, edges):
    """
    Validate an edge list and return the corresponding Tree.

    Parameters
    ----------
    n: int
        Number of vertices. Vertices are 0, ..., n-1.
    edges: iterable
        Pairs (u, v). Orientation and order do not matter.

    Returns
    -------
    tree: Tree
        Tree with edges normalized to u < v and sorted.

    Raises
    ------
    SelfLoop, DuplicateEdge, VertexOutOfRange, Disconnected, CycleDetected
    """
    n = int(n)
    if n < 1:
        raise Disconnected(f"A tree needs at least one vertex, got n={n}")
    if n > MAX_VERTICES:
        raise VertexOutOfRange(
            f"n={n} exceeds the supported maximum of {MAX_VERTICES}")

    normalized = set()
    for e in edges:
        u, v = (int(x) for x in e)
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u == v:
            raise SelfLoop(f"Self-loop at vertex {u}")
        pair = (min(u, v), max(u, v))
        if pair in normalized:
            raise DuplicateEdge(f"Edge {pair} given twice")
        normalized.add(pair)

    if len(normalized) < n - 1:
        raise Disconnected(f"{len(normalized)} edges cannot connect "
                           f"{n} vertices")
    elif len(normalized) > n - 1:
        raise CycleDetected(f"{len(normalized)} edges on {n} vertices "
                            "always close a cycle")

    t = Tree(n, tuple(sorted(normalized)))
    if n > 1:
        ncomp = connected_components(t.csgraph, directed=False,
                                     return_labels=False)
        if ncomp != 1:
            # n-1 edges and several components: some component has a cycle
            raise Disconnected(f"Edges split the {n} vertices into {ncomp} "
                               "components")
    return t


def degree_sequence_of(t):
    """Return the DegreeSequence (non-leaf degrees) of a tree."""
    deg = t.degrees
    internal = np.sort(deg[deg >= 2])[::-1]
    return DegreeSequence(tuple(int(d) for d in internal),
                          n=t.n if len(internal) == 0 else None)


def root_at(t, r):
    """
    Root the tree at r and compute parents, heights and subtree sizes by a
    breadth-first traversal.
    """
    _check_vertex(t.n, r)
    n = t.n
    if n == 1:
        return RootedTree(t, r, (-1,), (0,), (1,), (r,))

    order, pred = breadth_first_order(t.csgraph, r, directed=False,
                                      return_predecessors=True)
    parent = pred.astype(np.int64)
    parent[r] = -1
    height = np.zeros(n, dtype=np.int64)
    for v in order[1:]:
        height[v] = height[parent[v]] + 1
    size = np.ones(n, dtype=np.int64)
    for v in order[:0:-1]:
        size[parent[v]] += size[v]

    return RootedTree(t, int(r), tuple(int(p) for p in parent),
                      tuple(int(h) for h in height),
                      tuple(int(s) for s in size),
                      tuple(int(v) for v in order))


def bfs_distances(t, indices=None):
    """
    Hop distances from the vertices in `indices` (all by default), as an
    int64 array. Each row is one unweighted breadth-first search.
    """
    if t.n == 1:
        d = np.zeros((1, 1), dtype=np.int64)
        return d if indices is None else d[0]
    dist = shortest_path(t.csgraph, method='D', directed=False,
                         unweighted=True, indices=indices)
    # Hop counts are small integers, exactly representable
    return np.rint(dist).astype(np.int64)


def distance_of(t, v):
    """Return g_T(v), the sum of distances from v to every vertex."""
    _check_vertex(t.n, v)
    return int(bfs_distances(t, indices=v).sum())


def all_distances_of(t):
    """
    g_T(v) for every vertex in O(n), by rerooting: moving the root from a
    parent to a child u changes the distance sum by n - 2|T(u)|.
    """
    rt = root_at(t, 0)
    g = np.zeros(t.n, dtype=np.int64)
    g[0] = sum(rt.height)
    for v in rt.order[1:]:
        g[v] = g[rt.parent[v]] + t.n - 2 * rt.subtree_size[v]
    return g


def centroid(t):
    """
    Return the vertex or the two adjacent vertices minimizing g_T, sorted by
    vertex id.
    """
    g = all_distances_of(t)
    return [int(v) for v in np.flatnonzero(g == g.min())]


def _ahu_code(rt):
    codes = [None] * rt.n
    for v in reversed(rt.order):
        codes[v] = b'(' + b''.join(sorted(codes[c] for c in
                                          rt.children[v])) + b')'
    return codes[rt.root]


def canonical_code(t):
    """
    AHU encoding of the tree rooted at its centroid. For two centroids the
    lexicographically smaller encoding is used, so that two trees have the
    same code if and only if they are isomorphic.
    """
    return min(_ahu_code(root_at(t, c)) for c in centroid(t))


def path_between(t, u, v):
    """Return the vertices of the unique u-v path, from u to v."""
    _check_vertex(t.n, v)
    rt = root_at(t, u)
    path = [v]
    while path[-1] != u:
        path.append(rt.parent[path[-1]])
    return path[::-1]


def farthest_vertex(t, u):
    """Farthest vertex from u; ties go to the smallest vertex id."""
    d = bfs_distances(t, indices=u)
    return int(np.argmax(d))


def longest_path(t, start=0):
    """A longest path, found by two breadth-first searches."""
    a = farthest_vertex(t, start)
    return path_between(t, a, farthest_vertex(t, a))


def maximal_paths(t):
    """
    Every leaf-to-leaf path (paths that cannot be extended), with the
    smaller leaf first, in lexicographic order of the end points.
    """
    leaves = t.get_leaves()
    paths = []
    for i, u in enumerate(leaves):
        rt = root_at(t, u)
        for v in leaves[i+1:]:
            path = [v]
            while path[-1] != u:
                path.append(rt.parent[path[-1]])
            paths.append(path[::-1])
    return paths


def check_u64(value, what='value'):
    """Return value, raising WienerOverflow if it does not fit in 64 bits."""
    if value < 0 or value > U64_MAX:
        raise WienerOverflow(f"{what}={value} does not fit in an unsigned "
                             "64-bit integer")
    return value
