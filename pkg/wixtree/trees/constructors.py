#!/usr/bin/python
"""
Extremal trees for a given degree sequence: the greedy tree, which
minimizes the Wiener index, and the greedy caterpillar, together with
checkers for their structural characterizations.
"""
from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple
from .tree import DegreeSequence, root_at, tree_from_edges
from ..errors import InvalidDegreeSequence


@dataclass(frozen=True)
class LevelProfile:
    """Degrees per height, each level in assignment (breadth-first) order."""
    levels: Tuple[Tuple[int, ...], ...]

    def is_non_increasing(self):
        return all(a >= b for lev in self.levels for a, b in zip(lev, lev[1:]))


@dataclass(frozen=True)
class GreedyCheck:
    """
    Result of `is_greedy_tree`. Evaluates as a boolean; on failure
    `condition` is the index (1 to 5) of the first violated condition and
    `witness` a pair of vertices violating it.
    """
    ok: bool
    condition: Optional[int] = None
    witness: Optional[Tuple[int, int]] = None

    def __bool__(self):
        return self.ok


def _check_degree_sequence(ds):
    if not isinstance(ds, DegreeSequence):
        raise InvalidDegreeSequence(f"Expected a DegreeSequence, got {ds!r}")


def _degenerate(ds):
    if ds.n == 1:
        return tree_from_edges(1, [])
    return tree_from_edges(2, [(0, 1)])


def build_greedy_tree(ds):
    """
    Build the greedy tree of a degree sequence, rooted at vertex 0.

    The root takes the largest degree. Parents are processed in breadth
    first order (which is also non-increasing degree order), and each one
    hands the largest remaining degrees to its new children; once the
    degrees run out the remaining children are leaves. Equal degrees are
    assigned in input order and equal-degree parents processed first in,
    first out, so vertex ids are reproducible.

    Parameters
    ----------
    ds: DegreeSequence

    Returns
    -------
    rooted: RootedTree
        The greedy tree rooted at its root, vertex 0.
    """
    _check_degree_sequence(ds)
    if ds.k == 0:
        return root_at(_degenerate(ds), 0)

    remaining = deque(ds.degrees)
    edges = []
    queue = deque([(0, remaining.popleft(), False)])
    nv = 1
    while queue:
        v, d, has_parent = queue.popleft()
        for _ in range(d - has_parent):
            child = nv
            nv += 1
            edges.append((v, child))
            if remaining:
                queue.append((child, remaining.popleft(), True))

    t = tree_from_edges(nv, edges)
    return root_at(t, 0)


def get_level_profile(rt):
    """Return the LevelProfile of a rooted tree."""
    deg = rt.tree.degrees
    return LevelProfile(tuple(tuple(int(deg[v]) for v in lev)
                              for lev in rt.get_levels()))


class _DescendantDegrees(object):
    """
    For every vertex, the extreme degrees among itself (offset 0) and its
    successors at each offset below it, as (degree, vertex) pairs.
    """
    def __init__(self, rt):
        self.rt = rt
        deg = rt.tree.degrees
        self.table = [None] * rt.n
        for v in reversed(rt.order):
            d = (int(deg[v]), v)
            tab = [(d, d)]
            for c in rt.children[v]:
                for off, (lo, hi) in enumerate(self.table[c], 1):
                    if off == len(tab):
                        tab.append((lo, hi))
                    else:
                        tab[off] = (min(tab[off][0], lo),
                                    max(tab[off][1], hi))
            self.table[v] = tab

    def merged(self, vertices):
        tab = []
        for v in vertices:
            for off, (lo, hi) in enumerate(self.table[v]):
                if off == len(tab):
                    tab.append((lo, hi))
                else:
                    tab[off] = (min(tab[off][0], lo), max(tab[off][1], hi))
        return tab


def _dominates(tab_u, tab_w):
    """First offset where something under w has a larger degree than
    something under u, as a witness pair, or None."""
    for (lo_u, _), (_, hi_w) in zip(tab_u, tab_w):
        if lo_u[0] < hi_w[0]:
            return (lo_u[1], hi_w[1])
    return None


def is_greedy_tree(rt):
    """
    Check the characterization of greedy trees on a rooted tree:

    1. the root has the largest degree;
    2. the heights of any two leaves differ by at most one;
    3. a vertex closer to the root never has a smaller degree;
    4. if u and w have the same height and d(u) > d(w), every successor of u
       has a degree at least that of any successor of w of the same height;
    5. under the same hypothesis, with u and w having different parents, the
       same holds for the siblings of u against the siblings of w and for
       their successors of equal height.

    Returns
    -------
    check: GreedyCheck
    """
    t = rt.tree
    deg = t.degrees
    if t.n == 1:
        return GreedyCheck(True)

    top = int(deg.argmax())
    if deg[rt.root] < deg[top]:
        return GreedyCheck(False, 1, (rt.root, top))

    leaves = t.get_leaves()
    low = min(leaves, key=lambda v: rt.height[v])
    high = max(leaves, key=lambda v: rt.height[v])
    if rt.height[high] - rt.height[low] > 1:
        return GreedyCheck(False, 2, (low, high))

    levels = rt.get_levels()
    smallest = None
    for lev in levels:
        largest = max(lev, key=lambda v: deg[v])
        if (smallest is not None) and (deg[smallest] < deg[largest]):
            return GreedyCheck(False, 3, (smallest, largest))
        low = min(lev, key=lambda v: deg[v])
        if (smallest is None) or (deg[low] < deg[smallest]):
            smallest = low

    desc = _DescendantDegrees(rt)
    for lev in levels:
        for u in lev:
            for w in lev:
                if deg[u] <= deg[w]:
                    continue
                bad = _dominates(desc.table[u], desc.table[w])
                if bad is not None:
                    return GreedyCheck(False, 4, bad)

    for lev in levels[1:]:
        for u in lev:
            for w in lev:
                pu, pw = rt.parent[u], rt.parent[w]
                if (deg[u] <= deg[w]) or (pu == pw):
                    continue
                sib_u = [s for s in rt.children[pu] if s != u]
                sib_w = [s for s in rt.children[pw] if s != w]
                bad = _dominates(desc.merged(sib_u), desc.merged(sib_w))
                if bad is not None:
                    return GreedyCheck(False, 5, bad)

    return GreedyCheck(True)


def caterpillar_positions(k):
    """
    Spine positions in the order they receive the sorted degrees: both ends
    first, then moving inwards, v_1, v_k, v_2, v_{k-1}, ...
    """
    pos = []
    lo, hi = 0, k - 1
    while lo <= hi:
        pos.append(lo)
        if hi != lo:
            pos.append(hi)
        lo += 1
        hi -= 1
    return pos


def build_greedy_caterpillar(ds):
    """
    Build the greedy caterpillar: a spine v_1 ... v_k with
    d(v_1) >= d(v_k) >= d(v_2) >= d(v_{k-1}) >= ..., and pendant leaves
    completing the degrees. Spine vertices are 0..k-1 in spine order, the
    leaves follow.
    """
    _check_degree_sequence(ds)
    if ds.k == 0:
        return _degenerate(ds)

    k = ds.k
    spine_deg = [0] * k
    for p, d in zip(caterpillar_positions(k), ds.degrees):
        spine_deg[p] = d

    edges = [(i, i + 1) for i in range(k - 1)]
    nv = k
    for i, d in enumerate(spine_deg):
        n_spine = (i > 0) + (i < k - 1)
        for _ in range(d - n_spine):
            edges.append((i, nv))
            nv += 1
    return tree_from_edges(nv, edges)


def caterpillar_spine(t):
    """
    The non-leaf vertices in path order if they form a path, else None.
    Trees with at most two vertices have an empty spine.
    """
    deg = t.degrees
    spine = [v for v in range(t.n) if deg[v] >= 2]
    if len(spine) <= 1:
        return spine
    spine_set = set(spine)
    inner = {v: [u for u in t.get_neighbors(v) if u in spine_set]
             for v in spine}
    if any(len(nb) > 2 for nb in inner.values()):
        return None
    ends = [v for v in spine if len(inner[v]) == 1]
    order = [min(ends)]
    prev = None
    while len(order) < len(spine):
        v = order[-1]
        nxt = [u for u in inner[v] if u != prev]
        prev = v
        order.append(nxt[0])
    return order


def _ends_inwards(seq):
    return [seq[p] for p in caterpillar_positions(len(seq))]


def check_caterpillar(t):
    """
    True if the tree is a caterpillar whose spine degrees, read from both
    ends inwards (v_1, v_k, v_2, v_{k-1}, ...), are non-increasing for the
    spine in one of its two orientations.
    """
    spine = caterpillar_spine(t)
    if spine is None:
        return False
    deg = [int(t.degrees[v]) for v in spine]
    for seq in (deg, deg[::-1]):
        chain = _ends_inwards(seq)
        if all(a >= b for a, b in zip(chain, chain[1:])):
            return True
    return False
