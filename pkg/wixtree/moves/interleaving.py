#!/usr/bin/python
"""
Labelling conditions on the components hanging off a path.

A labelling u_1, w_1, u_2, w_2, ... starts at one path vertex and grows
outwards, alternating between the two sides of the start. The chain of
component sizes along the labelling is non-increasing in extremal trees
for the minimum and non-decreasing (ignoring the two end leaves of the
path) in those for the maximum. While all the labelled sizes are equal
the sides may be exchanged, and once one side has no vertices left the
labelling carries on along the other.
"""
import operator


_ORDER = {'min': operator.ge, 'max': operator.le}


def _labelling_exists(values, ordered):
    """
    Whether the positions 0..L-1 can be labelled as described above with
    `ordered(previous, next)` holding along the chain. States are the
    labelled interval, the side of the last label and whether the chain is
    still constant.
    """
    L = len(values)
    if L <= 1:
        return True
    stack = [(s, s, None, True) for s in range(L)]
    seen = set()
    while stack:
        state = stack.pop()
        if state in seen:
            continue
        seen.add(state)
        lo, hi, side, tied = state
        if (lo == 0) and (hi == L - 1):
            return True
        last = values[hi] if side == 'R' else values[lo]
        open_side = {'L': lo > 0, 'R': hi < L - 1}
        for new_side in ('L', 'R'):
            if not open_side[new_side]:
                continue
            other = 'R' if new_side == 'L' else 'L'
            if (new_side == side) and (not tied) and open_side[other]:
                continue
            pos = lo - 1 if new_side == 'L' else hi + 1
            v = values[pos]
            if not ordered(last, v):
                continue
            if new_side == 'L':
                stack.append((pos, hi, 'L', tied and v == last))
            else:
                stack.append((lo, pos, 'R', tied and v == last))
    return False


def _check_direction(direction):
    if direction not in _ORDER:
        raise ValueError(f"Unknown direction {direction}. Use 'min' or "
                         "'max'")


def check_size_interleaving(d, direction='min'):
    """
    Check whether the path of a decomposition admits a labelling with
    |U_1| >= |W_1| >= |U_2| >= ... ('min') or |U_1| <= |W_1| <= ...
    ('max', end vertices excluded).

    Parameters
    ----------
    d: PathDecomposition
    direction: str
        'min' or 'max'.

    Returns
    -------
    ok: bool
    """
    _check_direction(direction)
    path = d.path
    if direction == 'max':
        path = path[1:-1]
    sizes = [d.component_size(v) for v in path]
    return _labelling_exists(sizes, _ORDER[direction])


def check_degree_interleaving(d):
    """
    Check whether some labelling of the path is non-increasing both in the
    component sizes and in the degrees, d(u_1) >= d(w_1) >= d(u_2) >= ...
    """
    deg = d.tree.degrees
    values = [(d.component_size(v), int(deg[v])) for v in d.path]
    return _labelling_exists(values,
                             lambda a, b: (a[0] >= b[0]) and (a[1] >= b[1]))
