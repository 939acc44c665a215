# flake8: noqa
from .tree import (DegreeSequence, Tree, RootedTree, tree_from_edges,
                   degree_sequence_of, root_at, bfs_distances, distance_of,
                   all_distances_of, centroid, canonical_code, path_between,
                   farthest_vertex, longest_path, maximal_paths)
from .wiener import (wiener_pairwise, wiener_edges, closed_form_path,
                     closed_form_star)
from .decomposition import (PathDecomposition, path_decompose,
                            centred_subpaths)
from .constructors import (LevelProfile, GreedyCheck,
                           build_greedy_tree, get_level_profile,
                           is_greedy_tree, build_greedy_caterpillar,
                           caterpillar_spine, check_caterpillar)
from .io import to_json, from_json, read_tree, to_dot
