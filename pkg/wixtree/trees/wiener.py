#!/usr/bin/python
"""
Exact Wiener index of a tree, computed in two independent ways so that
each one can validate the other.
"""
import numpy as np
from .tree import bfs_distances, check_u64, root_at

# Largest number of distance matrix entries held at once by wiener_pairwise
PAIRWISE_CHUNK = 2**22


def wiener_pairwise(t):
    """
    Wiener index as half the sum of g_T(v) over all vertices, with one
    breadth-first search per vertex (O(n^2) time). The searches run in
    blocks of rows so that at most PAIRWISE_CHUNK distances are in memory.

    Parameters
    ----------
    t: Tree

    Returns
    -------
    sigma: int
        Sum of the distances over all unordered pairs of vertices.
    """
    if t.n == 1:
        return 0
    rows = max(1, PAIRWISE_CHUNK // t.n)
    total = 0
    for start in range(0, t.n, rows):
        block = np.arange(start, min(start + rows, t.n))
        total += int(bfs_distances(t, indices=block).sum(dtype=np.int64))
    return check_u64(total // 2, 'wiener')


def wiener_edges(t):
    """
    Wiener index as the sum over edges of s(e) * (n - s(e)), where s(e) is
    the number of vertices on one side of e (O(n)). The side sizes are the
    subtree sizes of an arbitrary rooting.
    """
    if t.n == 1:
        return 0
    rt = root_at(t, 0)
    s = np.array(rt.subtree_size, dtype=np.int64)
    s = np.delete(s, rt.root)
    return check_u64(int(np.sum(s * (t.n - s))), 'wiener')


def closed_form_path(n):
    """Wiener index of the path on n vertices, n(n^2 - 1)/6."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return check_u64(n * (n * n - 1) // 6, 'wiener')


def closed_form_star(n):
    """Wiener index of the star on n vertices, (n - 1)^2."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return check_u64((n - 1)**2, 'wiener')
