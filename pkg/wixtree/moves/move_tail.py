from .move_base import ExchangeMove, _check_k, weighted_balance
from ..errors import InvalidMove


def predict_tail_swap_delta(d, k):
    """
    Change of the Wiener index when X_{>k} and Y_{>k} are exchanged.

    Parameters
    ----------
    d: PathDecomposition
    k: int
        1 <= k <= min(p, q). Empty tails are allowed and give 0.

    Returns
    -------
    delta: int
        sum_{i<=k} w_i (|X_i| - |Y_i|) (|X_{>k}| - |Y_{>k}|), with
        w_i = 2i - 1 without z and 2i with z.
    """
    _check_k(d, k)
    return weighted_balance(d, k) * (d.tail_x(k) - d.tail_y(k))


class TailSwap(ExchangeMove):
    """
    Hang X_{>k} from y_k and Y_{>k} from x_k: the path edges
    (x_k, x_{k+1}) and (y_k, y_{k+1}) become (x_k, y_{k+1}) and
    (y_k, x_{k+1}).
    """
    kind = 'TailSwap'

    def _predict(self):
        return predict_tail_swap_delta(self.decomposition, self.k)

    def _check_valid(self):
        d = self.decomposition
        if (self.k >= len(d.x)) or (self.k >= len(d.y)):
            raise InvalidMove(f"{self}: both tails must be non-empty "
                              "to keep the degrees")

    def _get_rewiring(self):
        d = self.decomposition
        xk, yk = self.x_k, self.y_k
        x1, y1 = d.x[self.k], d.y[self.k]
        return [(xk, x1), (yk, y1)], [(xk, y1), (yk, x1)]
