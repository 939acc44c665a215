#!/usr/bin/python
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from ..errors import BadParity, IndexOutOfRange, NotAPath, VertexOutOfRange
from .tree import Tree


@dataclass(frozen=True)
class PathDecomposition:
    """
    The components left after deleting the edges of a path.

    The path is read from its centre outwards: `x` holds x_1, x_2, ... on
    one side, `y` holds y_1, y_2, ... on the other and `z` is the central
    vertex when the path has an odd number of vertices and is decomposed
    "with z". `anchor[v]` is the path vertex whose component contains v.

    Indices i, k in the accessors are 1-based, as x_1 is the vertex next to
    the centre.
    """
    tree: Tree = field(repr=False, compare=False)
    x: Tuple[int, ...]
    y: Tuple[int, ...]
    z: Optional[int]
    anchor: Tuple[int, ...] = field(repr=False)

    @property
    def has_z(self):
        return self.z is not None

    @property
    def path(self):
        """The path vertices from y_p to x_q."""
        mid = () if self.z is None else (self.z,)
        return tuple(reversed(self.y)) + mid + self.x

    @cached_property
    def _sizes(self):
        return np.bincount(np.array(self.anchor, dtype=np.int64),
                           minlength=self.tree.n)

    @cached_property
    def sizes_x(self):
        return np.array([self._sizes[v] for v in self.x], dtype=np.int64)

    @cached_property
    def sizes_y(self):
        return np.array([self._sizes[v] for v in self.y], dtype=np.int64)

    def component_size(self, v):
        return int(self._sizes[v])

    def component(self, v):
        """Vertex set of the component anchored at path vertex v."""
        return frozenset(u for u, a in enumerate(self.anchor) if a == v)

    def _check_index(self, sizes, i, allow_zero=False):
        lo = 0 if allow_zero else 1
        if not (lo <= i <= len(sizes)):
            raise IndexOutOfRange(f"Index {i} outside [{lo}, {len(sizes)}]")

    def size_x(self, i):
        self._check_index(self.sizes_x, i)
        return int(self.sizes_x[i-1])

    def size_y(self, i):
        self._check_index(self.sizes_y, i)
        return int(self.sizes_y[i-1])

    def tail_x(self, k):
        """|V(X_{>k})|."""
        self._check_index(self.sizes_x, k, allow_zero=True)
        return int(self.sizes_x[k:].sum())

    def tail_y(self, k):
        """|V(Y_{>k})|."""
        self._check_index(self.sizes_y, k, allow_zero=True)
        return int(self.sizes_y[k:].sum())

    def weights(self, k):
        """
        Extra distance between the i-th vertices of both sides, i = 1..k:
        x_i and y_i are 2i-1 apart without z and 2i apart with z.
        """
        i = np.arange(1, k + 1, dtype=np.int64)
        return 2 * i if self.has_z else 2 * i - 1

    def mirrored(self):
        """The same decomposition with the x and y sides exchanged."""
        return PathDecomposition(self.tree, self.y, self.x, self.z,
                                 self.anchor)


def _check_path(t, path):
    if len(path) == 0:
        raise NotAPath("Empty path")
    for v in path:
        if not (0 <= v < t.n):
            raise VertexOutOfRange(f"Vertex {v} out of range for n={t.n}")
    if len(set(path)) != len(path):
        raise NotAPath(f"Path {path} repeats vertices")
    for u, v in zip(path, path[1:]):
        if not t.has_edge(u, v):
            raise NotAPath(f"{u} and {v} are not adjacent")


def path_decompose(t, path, z_mode):
    """
    Split the tree into the components hanging off a path.

    Parameters
    ----------
    t: Tree
    path: list
        Consecutive vertices of a simple path.
    z_mode: bool
        If True, the path must have an odd number of vertices and its middle
        vertex is z. Otherwise it must have an even number of vertices and
        the centre is its middle edge.

    Returns
    -------
    decomposition: PathDecomposition
        Sides labelled so that |V(X_1)| >= |V(Y_1)|; on ties x_1 is the
        vertex with the smaller id.
    """
    path = [int(v) for v in path]
    _check_path(t, path)
    if z_mode and len(path) % 2 == 0:
        raise BadParity(f"A path with z needs an odd number of vertices, "
                        f"got {len(path)}")
    if (not z_mode) and len(path) % 2 == 1:
        raise BadParity(f"A path without z needs an even number of "
                        f"vertices, got {len(path)}")

    on_path = set(zip(path, path[1:])) | set(zip(path[1:], path))
    kept = np.array([e for e in t.edges if e not in on_path],
                    dtype=np.int64).reshape(-1, 2)
    g = coo_matrix((np.ones(len(kept), dtype=np.int8),
                    (kept[:, 0], kept[:, 1])), shape=(t.n, t.n))
    _, labels = connected_components(g, directed=False)
    label_anchor = {int(labels[v]): v for v in path}
    anchor = tuple(label_anchor[int(lab)] for lab in labels)

    m = len(path) // 2
    if z_mode:
        z = path[m]
        right = tuple(path[m+1:])
    else:
        z = None
        right = tuple(path[m:])
    left = tuple(reversed(path[:m]))

    d = PathDecomposition(t, right, left, z, anchor)
    if len(right) == 0:
        return d
    s_right = d.component_size(right[0])
    s_left = d.component_size(left[0])
    if (s_left > s_right) or ((s_left == s_right) and left[0] < right[0]):
        d = d.mirrored()
    return d


def centred_subpaths(path):
    """
    The longest sub-path of `path` centred at each of its vertices and at
    each of its edges, as (sub_path, z_mode) pairs. Single vertices are
    skipped.
    """
    L = len(path)
    subs = []
    for i in range(L):
        r = min(i, L - 1 - i)
        if r > 0:
            subs.append((list(path[i-r:i+r+1]), True))
        if i + 1 < L:
            r = min(i, L - 2 - i)
            subs.append((list(path[i-r:i+r+2]), False))
    return subs
