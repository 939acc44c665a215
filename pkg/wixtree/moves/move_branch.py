from collections import Counter
from itertools import combinations
from .move_base import ExchangeMove, _check_k, weighted_balance
from ..errors import InvalidBranchSelection, InvalidMove
from ..trees.tree import root_at


def get_branches(d, k):
    """
    The branches of y_k: the subtrees hanging from y_k off the path, as a
    dict {branch root: number of vertices}.
    """
    _check_k(d, k)
    yk = d.y[k-1]
    on_path = set(d.path)
    rt = root_at(d.tree, yk)
    return {c: rt.subtree_size[c] for c in rt.children[yk]
            if c not in on_path}


def predict_branch_move_delta(d, k, branch_sizes):
    """
    Change of the Wiener index when branches of y_k with the given sizes
    are moved to x_k:

        sum_{i<k} w_i (|Y_i| - |X_i|) |B|
        + w_k (|Y_{>k-1}| - |B| - |X_{>k-1}|) |B|

    where |B| is the total size of the moved branches.

    Raises
    ------
    InvalidBranchSelection
        If the sizes are not those of distinct branches of y_k.
    """
    _check_k(d, k)
    wanted = Counter(int(s) for s in branch_sizes)
    available = Counter(get_branches(d, k).values())
    if any(available[s] < c for s, c in wanted.items()):
        raise InvalidBranchSelection(
            f"Branch sizes {sorted(wanted.elements())} are not available at "
            f"y_{k} (branches of sizes {sorted(available.elements())})")
    B = sum(wanted.elements())
    if B == 0:
        return 0
    w_k = int(d.weights(k)[-1])
    return (-weighted_balance(d, k - 1) * B +
            w_k * (d.tail_y(k - 1) - B - d.tail_x(k - 1)) * B)


class BranchMove(ExchangeMove):
    """
    Detach b = d(y_k) - d(x_k) branches from y_k and attach them to x_k,
    which swaps the degrees of x_k and y_k.
    """
    kind = 'BranchMove'

    def __init__(self, decomposition, k, branch_roots):
        super().__init__(decomposition, k)
        self.branch_roots = tuple(sorted(int(r) for r in branch_roots))
        branches = get_branches(decomposition, self.k)
        missing = [r for r in self.branch_roots if r not in branches]
        if missing:
            raise InvalidBranchSelection(
                f"Vertices {missing} are not branch roots of y_{self.k}")
        self.branch_sizes = tuple(branches[r] for r in self.branch_roots)

    def _predict(self):
        return predict_branch_move_delta(self.decomposition, self.k,
                                         self.branch_sizes)

    def _check_valid(self):
        b = self.tree.get_degree(self.y_k) - self.tree.get_degree(self.x_k)
        if (b <= 0) or (len(self.branch_roots) != b):
            raise InvalidMove(f"{self}: moving {len(self.branch_roots)} "
                              f"branches does not swap the degrees "
                              f"(d(y_k) - d(x_k) = {b})")

    def _get_rewiring(self):
        xk, yk = self.x_k, self.y_k
        return ([(yk, r) for r in self.branch_roots],
                [(xk, r) for r in self.branch_roots])

    def to_dict(self):
        d = super().to_dict()
        d['branches'] = list(self.branch_roots)
        return d

    def __repr__(self):
        return f"{self.kind}(k={self.k}, branches={list(self.branch_roots)})"


def iter_branch_moves(d, k):
    """
    Every valid BranchMove at position k, smallest total branch size first
    (ties by branch ids).
    """
    t = d.tree
    b = t.get_degree(d.y[k-1]) - t.get_degree(d.x[k-1])
    if b <= 0:
        return
    branches = get_branches(d, k)
    if len(branches) < b:
        return
    subsets = sorted(combinations(sorted(branches), b),
                     key=lambda s: (sum(branches[r] for r in s), s))
    for s in subsets:
        yield BranchMove(d, k, s)
