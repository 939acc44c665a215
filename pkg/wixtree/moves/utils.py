from .move_base import ExchangeMove
from .move_branch import iter_branch_moves
from ..errors import InvalidMove


def move_from_name(name):
    def all_subclasses(cls):
        # Recursively find all subclasses (and their subclasses)
        return set(cls.__subclasses__()).union(
            [s for c in cls.__subclasses__() for s in all_subclasses(c)])
    subcs = all_subclasses(ExchangeMove)
    moves = {m.kind: m for m in subcs}
    if name in moves:
        return moves[name]
    else:
        raise ValueError(f"Unknown move {name}")


def iter_moves(d, both_directions=True):
    """
    Every valid exchange move on a decomposition: tail and component swaps
    for each k, then branch moves from y_k to x_k. With `both_directions`
    branch moves from x_k to y_k (on the mirrored decomposition) follow.
    """
    top = min(len(d.x), len(d.y))
    for k in range(1, top + 1):
        for name in ('TailSwap', 'ComponentSwap'):
            m = move_from_name(name)(d, k)
            if m.is_valid():
                yield m
    sides = [d, d.mirrored()] if both_directions else [d]
    for dd in sides:
        for k in range(1, top + 1):
            yield from iter_branch_moves(dd, k)


def apply_move(t, m):
    """
    Perform a move on t. The move must have been built on a decomposition
    of t.

    Raises
    ------
    InvalidMove
        If the move belongs to another tree or cannot be performed.
    """
    if (m.tree.n != t.n) or (m.tree.edges != t.edges):
        raise InvalidMove(f"{m} was built for a different tree")
    return m.apply()
