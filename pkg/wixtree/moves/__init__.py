# flake8: noqa
from .move_base import ExchangeMove
from .move_tail import TailSwap, predict_tail_swap_delta
from .move_component import ComponentSwap, predict_component_swap_delta
from .move_branch import (BranchMove, predict_branch_move_delta,
                          get_branches, iter_branch_moves)
from .utils import move_from_name, iter_moves, apply_move
from .interleaving import check_size_interleaving, check_degree_interleaving
from .local_search import LocalSearch, local_search
