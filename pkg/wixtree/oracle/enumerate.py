#!/usr/bin/python
"""
Labeled trees with a prescribed degree sequence, through Prüfer sequences:
the vertex i < k gets the degree d_i (and appears d_i - 1 times in the
sequence), the vertices k..n-1 are the leaves.
"""
from collections import Counter
from math import factorial, prod
from sympy.combinatorics.prufer import Prufer
from sympy.utilities.iterables import multiset_permutations, partitions
from .data import get_default_cap
from ..errors import InvalidDegreeSequence, TooLarge
from ..trees.tree import DegreeSequence, check_u64, tree_from_edges


def _check_degree_sequence(ds):
    if not isinstance(ds, DegreeSequence):
        raise InvalidDegreeSequence(f"Expected a DegreeSequence, got {ds!r}")


def get_prufer_multiset(ds):
    """Sorted multiset of the Prüfer sequences of trees with degrees ds."""
    return [i for i, d in enumerate(ds.degrees) for _ in range(d - 1)]


def _exact_count(ds):
    if ds.k == 0:
        return 1
    return factorial(ds.n - 2) // prod(factorial(d - 1) for d in ds.degrees)


def count_labeled(ds):
    """
    Number of labeled trees where vertex i < k has degree d_i and the rest
    are leaves: (n-2)! / prod_i (d_i - 1)!.
    """
    _check_degree_sequence(ds)
    return check_u64(_exact_count(ds), 'labeled count')


def check_cap(ds, cap):
    """
    Return count_labeled(ds), raising TooLarge if it exceeds the cap. The
    comparison is made on the exact count, so counts beyond 64 bits are
    over the cap rather than an overflow.
    """
    _check_degree_sequence(ds)
    count = _exact_count(ds)
    if count > cap:
        raise TooLarge(f"{ds} has {count} labeled trees, more than the cap "
                       f"of {cap}")
    return check_u64(count, 'labeled count')


def decode(ds, seq):
    """The tree of a Prüfer sequence."""
    return tree_from_edges(ds.n, Prufer.to_tree([int(i) for i in seq]))


def _degenerate(ds):
    if ds.n == 1:
        return tree_from_edges(1, [])
    return tree_from_edges(2, [(0, 1)])


def _check_prefix(ds, prefix):
    remaining = Counter(get_prufer_multiset(ds))
    remaining.subtract(Counter(int(i) for i in prefix))
    if any(c < 0 for c in remaining.values()):
        raise ValueError(f"Prefix {list(prefix)} is not the start of any "
                         f"Prüfer sequence for {ds}")
    return sorted(remaining.elements())


def enumerate_labeled(ds, cap=None, prefix=()):
    """
    Yield every labeled tree with the degree sequence exactly once, in the
    lexicographic order of their Prüfer sequences.

    Parameters
    ----------
    ds: DegreeSequence
    cap: int
        Refuse to enumerate more than `cap` trees. Defaults to
        `get_default_cap()`.
    prefix: tuple
        Only yield the trees whose Prüfer sequence starts with this prefix.
        The partitions from `prefixes` cover the whole stream.

    Raises
    ------
    TooLarge
        If count_labeled(ds) exceeds the cap.
    """
    _check_degree_sequence(ds)
    cap = get_default_cap() if cap is None else cap
    check_cap(ds, cap)
    if ds.k == 0:
        if not prefix:
            yield _degenerate(ds)
        return

    prefix = [int(i) for i in prefix]
    rest = _check_prefix(ds, prefix)
    for seq in multiset_permutations(rest):
        yield decode(ds, prefix + seq)


def prefixes(ds, size=1):
    """
    The distinct Prüfer prefixes of a given size, in lexicographic order.
    Each one defines a partition of `enumerate_labeled`.
    """
    _check_degree_sequence(ds)
    m = get_prufer_multiset(ds)
    size = min(size, len(m))
    return [tuple(p) for p in multiset_permutations(m, size)]


def random_tree(ds, rng):
    """
    A uniformly random labeled tree with the degree sequence.

    Parameters
    ----------
    ds: DegreeSequence
    rng: numpy.random.Generator
    """
    _check_degree_sequence(ds)
    if ds.k == 0:
        return _degenerate(ds)
    return decode(ds, rng.permutation(get_prufer_multiset(ds)))


def degree_sequences(n):
    """
    Every valid degree sequence of trees on n vertices, sorted in
    decreasing lexicographic order. Sequences with k non-leaf vertices
    correspond to the partitions of n - 2 into k parts d_i - 1.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n <= 2:
        return [DegreeSequence((), n=n)]
    seqs = []
    for p in partitions(n - 2):
        degrees = sorted((part + 1 for part, mult in p.items()
                          for _ in range(mult)), reverse=True)
        seqs.append(DegreeSequence(tuple(degrees)))
    return sorted(seqs, key=lambda ds: ds.degrees, reverse=True)


def all_degree_sequences(max_n, min_n=1):
    """Every valid degree sequence with min_n <= n <= max_n."""
    return [ds for n in range(min_n, max_n + 1) for ds in degree_sequences(n)]
