# flake8: noqa
from .data import Data, get_default_cap, DEFAULT_CAP
from .enumerate import (count_labeled, check_cap, enumerate_labeled,
                        prefixes, random_tree, degree_sequences,
                        all_degree_sequences)
from .extremal import ExtremalReport, extremal_scan, verify_theorems
from .tools import save_json
