#!/usr/bin/python
import sys
import numpy as np
from .utils import iter_moves
from ..errors import DualWienerMismatch
from ..trees.decomposition import centred_subpaths, path_decompose
from ..trees.tree import farthest_vertex, maximal_paths, path_between
from ..trees.wiener import wiener_edges


_SIGN = {'min': 1, 'max': -1}


class LocalSearch(object):
    """
    Descent (direction 'min') or ascent ('max') on the Wiener index of
    trees with a fixed degree sequence, using the exchange moves.

    Each step draws a random leaf, takes the vertex farthest from it and
    tries every move on the sub-paths centred at each vertex and edge of
    that maximal path. If none of them improves the Wiener index, every
    maximal path of the tree is scanned; the search stops when this full
    scan finds no strictly improving move as well.
    """
    def __init__(self, tree, direction='min', seed=0, max_moves=None,
                 verbose=False):
        if direction not in _SIGN:
            raise ValueError(f"Unknown direction {direction}. Use 'min' or "
                             "'max'")
        self.start = tree
        self.direction = direction
        self.seed = seed
        self.max_moves = max_moves
        self.verbose = verbose
        self.rng = np.random.default_rng(seed)
        self.tree = tree
        # Wiener index after each move, starting value first
        self.trajectory = [wiener_edges(tree)]
        self.moves = []
        self.converged = False

    def _improves(self, delta):
        return _SIGN[self.direction] * delta < 0

    def _best_move(self, paths):
        best = None
        for path in paths:
            for sub, z_mode in centred_subpaths(path):
                d = path_decompose(self.tree, sub, z_mode)
                for m in iter_moves(d):
                    delta = m.get_delta()
                    if not self._improves(delta):
                        continue
                    if (best is None) or \
                            self._improves(delta - best.get_delta()):
                        best = m
        return best

    def _sample_path(self):
        leaves = self.tree.get_leaves()
        u = leaves[self.rng.integers(len(leaves))]
        return path_between(self.tree, u, farthest_vertex(self.tree, u))

    def step(self):
        """
        Perform one improving move. Returns False if there is none.
        """
        if self.tree.n <= 3:
            return False
        m = self._best_move([self._sample_path()])
        if m is None:
            m = self._best_move(maximal_paths(self.tree))
        if m is None:
            return False

        new = m.apply()
        sigma = wiener_edges(new)
        if sigma != self.trajectory[-1] + m.get_delta():
            raise DualWienerMismatch(
                f"{m} predicted a change of {m.get_delta()} but the Wiener "
                f"index went from {self.trajectory[-1]} to {sigma}")
        if self.verbose:
            print(f"{m}: {self.trajectory[-1]} -> {sigma}", file=sys.stderr)
        self.tree = new
        self.trajectory.append(sigma)
        self.moves.append(m.to_dict())
        return True

    def run(self):
        """
        Iterate until no improving move is left or `max_moves` moves have
        been made. Returns the final tree.
        """
        while (self.max_moves is None) or (len(self.moves) < self.max_moves):
            if not self.step():
                self.converged = True
                break
        return self.tree

    def get_summary(self):
        return {'direction': self.direction, 'seed': self.seed,
                'start': self.trajectory[0], 'end': self.trajectory[-1],
                'moves': len(self.moves), 'converged': self.converged,
                'trajectory': list(self.trajectory)}


def local_search(t, direction='min', rng_seed=0, max_moves=None):
    """
    Run a LocalSearch from t and return the tree it stops at.
    """
    return LocalSearch(t, direction, rng_seed, max_moves).run()
