from .move_base import ExchangeMove, _check_k, weighted_balance
from ..errors import InvalidMove


def predict_component_swap_delta(d, k):
    """
    Change of the Wiener index when the components X_k and Y_k exchange
    their places on the path:

        sum_{i<k} w_i (|X_i| - |Y_i|) (|X_k| - |Y_k|)
        + w_k (|X_{>k}| - |Y_{>k}|) (|X_k| - |Y_k|)
    """
    _check_k(d, k)
    diff_k = d.size_x(k) - d.size_y(k)
    w_k = int(d.weights(k)[-1])
    return (weighted_balance(d, k - 1) * diff_k +
            w_k * (d.tail_x(k) - d.tail_y(k)) * diff_k)


class ComponentSwap(ExchangeMove):
    """
    x_k and y_k exchange their path neighbours, so that each one carries
    its own component to the other side. For k=1 without z the edge
    (x_1, y_1) stays.
    """
    kind = 'ComponentSwap'

    def _predict(self):
        return predict_component_swap_delta(self.decomposition, self.k)

    def _check_valid(self):
        d = self.decomposition
        if (self.k < len(d.x)) != (self.k < len(d.y)):
            raise InvalidMove(f"{self}: x_k and y_k must both be path ends "
                              "or both be inner path vertices")

    def _outer(self, side):
        return side[self.k] if self.k < len(side) else None

    def _get_rewiring(self):
        d = self.decomposition
        xk, yk = self.x_k, self.y_k
        ix, iy = self._inner_x(), self._inner_y()
        ox, oy = self._outer(d.x), self._outer(d.y)

        removed, added = [], []
        if (self.k == 1) and (not d.has_z):
            # x_1 and y_1 stay adjacent, only the outer tails cross
            pass
        else:
            removed += [(ix, xk), (iy, yk)]
            added += [(ix, yk), (iy, xk)]
        if ox is not None:
            removed += [(xk, ox), (yk, oy)]
            added += [(yk, ox), (xk, oy)]
        return removed, added
