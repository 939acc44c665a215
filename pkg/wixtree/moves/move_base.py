import numpy as np
from ..errors import IndexOutOfRange, InvalidMove
from ..trees.tree import tree_from_edges


class ExchangeMove(object):
    """
    Base exchange move on a path decomposition. Every move rewires a few
    edges around the k-th vertices x_k and y_k of the decomposition and
    keeps the degree sequence of the tree.

    Child classes implement `_predict` (the closed form for the change of
    the Wiener index) and `_get_rewiring` (the edges removed and added).
    """
    kind = None

    def __init__(self, decomposition, k):
        self.decomposition = decomposition
        self.k = int(k)
        _check_k(decomposition, self.k)
        self._delta = None

    @property
    def tree(self):
        return self.decomposition.tree

    @property
    def x_k(self):
        return self.decomposition.x[self.k-1]

    @property
    def y_k(self):
        return self.decomposition.y[self.k-1]

    def get_delta(self):
        """
        Returns the predicted change of the Wiener index,
        sigma(after) - sigma(before). Computed once and cached.
        """
        if self._delta is None:
            self._delta = int(self._predict())
        return self._delta

    @property
    def predicted_delta(self):
        return self.get_delta()

    def _predict(self):
        raise NotImplementedError("Do not use base class")

    def _check_valid(self):
        raise NotImplementedError("Do not use base class")

    def _get_rewiring(self):
        raise NotImplementedError("Do not use base class")

    def is_valid(self):
        try:
            self._check_valid()
        except InvalidMove:
            return False
        return True

    def apply(self):
        """
        Returns the tree obtained by performing the move.

        Raises:
            InvalidMove: if the move cannot be performed on its tree.
        """
        self._check_valid()
        removed, added = self._get_rewiring()
        removed = {(min(u, v), max(u, v)) for u, v in removed}
        for e in removed:
            if not self.tree.has_edge(*e):
                raise InvalidMove(f"{self}: edge {e} is not in the tree")
        edges = [e for e in self.tree.edges if e not in removed] + added
        return tree_from_edges(self.tree.n, edges)

    def to_dict(self):
        d = self.decomposition
        return {'kind': self.kind, 'k': self.k, 'delta': self.get_delta(),
                'path': list(d.path), 'z': d.z}

    def __repr__(self):
        return f"{self.kind}(k={self.k})"

    # Path neighbours of x_k and y_k on the centre side
    def _inner_x(self):
        d = self.decomposition
        if self.k > 1:
            return d.x[self.k-2]
        return d.z if d.has_z else d.y[0]

    def _inner_y(self):
        d = self.decomposition
        if self.k > 1:
            return d.y[self.k-2]
        return d.z if d.has_z else d.x[0]


def _check_k(d, k):
    top = min(len(d.x), len(d.y))
    if not (1 <= k <= top):
        raise IndexOutOfRange(f"k={k} outside [1, {top}]: both x_k and y_k "
                              "must exist")


def weighted_balance(d, k):
    """Sum of w_i (|V(X_i)| - |V(Y_i)|) for i = 1..k."""
    if k == 0:
        return 0
    w = d.weights(k)
    diff = d.sizes_x[:k] - d.sizes_y[:k]
    return int(np.dot(w, diff))
