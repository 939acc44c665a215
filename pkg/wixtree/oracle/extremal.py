#!/usr/bin/python
import sys
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Optional
from warnings import warn
from .data import get_default_cap
from .enumerate import (all_degree_sequences, check_cap, enumerate_labeled,
                        prefixes)
from ..errors import DualWienerMismatch, TheoremViolation, TooLarge
from ..trees.constructors import build_greedy_caterpillar, build_greedy_tree
from ..trees.tree import DegreeSequence, Tree, canonical_code
from ..trees.wiener import wiener_edges, wiener_pairwise


# Exhaustive sweeps beyond this many vertices are not practical
MAX_SWEEP_N = 12


@dataclass(frozen=True)
class ExtremalReport:
    """
    Outcome of an exhaustive scan of the trees with one degree sequence.
    `co_extremal_counts` holds the number of non-isomorphic trees attaining
    the minimum ('min') and the maximum ('max').
    """
    degree_sequence: DegreeSequence
    labeled_count: int
    distinct_count: int
    min_value: int
    max_value: int
    min_witness: Tree
    max_witness: Tree
    greedy_value: int
    caterpillar_value: int
    co_extremal_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def greedy_matches_min(self):
        return self.greedy_value == self.min_value

    @property
    def caterpillar_matches_max(self):
        return self.caterpillar_value == self.max_value

    @property
    def holds(self):
        return self.greedy_matches_min and self.caterpillar_matches_max

    def to_dict(self):
        return {'degree_sequence': list(self.degree_sequence.degrees),
                'n': self.degree_sequence.n,
                'labeled_count': self.labeled_count,
                'distinct_count': self.distinct_count,
                'min_value': self.min_value,
                'max_value': self.max_value,
                'min_witness': self.min_witness.to_dict(),
                'max_witness': self.max_witness.to_dict(),
                'greedy_value': self.greedy_value,
                'caterpillar_value': self.caterpillar_value,
                'greedy_matches_min': self.greedy_matches_min,
                'caterpillar_matches_max': self.caterpillar_matches_max,
                'co_extremal_counts': dict(self.co_extremal_counts)}


@dataclass
class _Partial:
    """Running extremes over part of the enumeration."""
    count: int = 0
    min_value: Optional[int] = None
    min_witness: Optional[Tree] = None
    max_value: Optional[int] = None
    max_witness: Optional[Tree] = None
    # Wiener index of one representative per isomorphism class
    codes: Dict[bytes, int] = field(default_factory=dict)

    def add(self, t):
        sigma = wiener_edges(t)
        self.count += 1
        if (self.min_value is None) or (sigma < self.min_value):
            self.min_value, self.min_witness = sigma, t
        if (self.max_value is None) or (sigma > self.max_value):
            self.max_value, self.max_witness = sigma, t
        self.codes.setdefault(canonical_code(t), sigma)

    def merge(self, other):
        """
        Fold in the extremes of a later part of the stream. Ties keep the
        earlier witness.
        """
        self.count += other.count
        if other.min_value is not None:
            if (self.min_value is None) or (other.min_value < self.min_value):
                self.min_value = other.min_value
                self.min_witness = other.min_witness
            if (self.max_value is None) or (other.max_value > self.max_value):
                self.max_value = other.max_value
                self.max_witness = other.max_witness
        for code, sigma in other.codes.items():
            self.codes.setdefault(code, sigma)
        return self


def _scan_partition(ds, prefix, cap):
    part = _Partial()
    for t in enumerate_labeled(ds, cap=cap, prefix=prefix):
        part.add(t)
    return part


def _check_witness(t, sigma):
    if wiener_pairwise(t) != sigma:
        raise DualWienerMismatch(f"Wiener index {sigma} from the edge cuts "
                                 f"but {wiener_pairwise(t)} from pairwise "
                                 f"distances for {t.to_dict()}")


def extremal_scan(ds, cap=None, jobs=1, verbose=False):
    """
    Enumerate every labeled tree with the degree sequence and compare the
    extreme Wiener indices with those of the greedy tree and of the greedy
    caterpillar.

    Parameters
    ----------
    ds: DegreeSequence
    cap: int
        Maximum number of labeled trees. Defaults to `get_default_cap()`.
    jobs: int
        Number of worker processes. The stream is split by Prüfer prefix
        and merged in order, so the report does not depend on it.
    verbose: bool
        Print progress.

    Returns
    -------
    report: ExtremalReport

    Raises
    ------
    TooLarge
        If there are more labeled trees than the cap.
    """
    cap = get_default_cap() if cap is None else cap
    count = check_cap(ds, cap)
    if verbose:
        print(f"Scanning {count} labeled trees for {ds}", file=sys.stderr)

    if (jobs > 1) and (ds.k > 0):
        parts = prefixes(ds, size=1)
        with Pool(jobs) as p:
            results = p.starmap(_scan_partition,
                                [(ds, prefix, cap) for prefix in parts])
        total = _Partial()
        for r in results:
            total.merge(r)
    else:
        total = _scan_partition(ds, (), cap)

    if total.count != count:
        raise RuntimeError(f"Enumerated {total.count} trees for {ds}, "
                           f"expected {count}")
    values = list(total.codes.values())
    if (min(values) != total.min_value) or (max(values) != total.max_value):
        raise RuntimeError(f"Extremes over non-isomorphic representatives "
                           f"differ from the labeled ones for {ds}")
    _check_witness(total.min_witness, total.min_value)
    _check_witness(total.max_witness, total.max_value)

    co_extremal = {'min': values.count(total.min_value),
                   'max': values.count(total.max_value)}
    for direction, c in co_extremal.items():
        if c > 1:
            warn(f"{c} non-isomorphic trees attain the {direction}imum "
                 f"Wiener index for {ds}")

    return ExtremalReport(
        degree_sequence=ds,
        labeled_count=total.count,
        distinct_count=len(total.codes),
        min_value=total.min_value,
        max_value=total.max_value,
        min_witness=total.min_witness,
        max_witness=total.max_witness,
        greedy_value=wiener_edges(build_greedy_tree(ds).tree),
        caterpillar_value=wiener_edges(build_greedy_caterpillar(ds)),
        co_extremal_counts=co_extremal)


def verify_theorems(max_n, strict=True, cap=None, jobs=1, verbose=False):
    """
    Run `extremal_scan` on every degree sequence with at most max_n
    vertices.

    Parameters
    ----------
    max_n: int
        Largest number of vertices, at most MAX_SWEEP_N.
    strict: bool
        If True, raise TheoremViolation once the sweep is over if the greedy
        tree is not a minimizer or the greedy caterpillar not a maximizer
        for some sequence. Otherwise return the reports anyway.

    Returns
    -------
    reports: list
        One ExtremalReport per degree sequence, by increasing n.
    """
    if max_n > MAX_SWEEP_N:
        raise TooLarge(f"max_n={max_n} is beyond the exhaustive sweep limit "
                       f"of {MAX_SWEEP_N}")
    reports = []
    for ds in all_degree_sequences(max_n):
        r = extremal_scan(ds, cap=cap, jobs=jobs, verbose=verbose)
        if verbose and not r.holds:
            print(f"{ds}: min {r.min_value} (greedy tree {r.greedy_value}), "
                  f"max {r.max_value} (greedy caterpillar "
                  f"{r.caterpillar_value})", file=sys.stderr)
        reports.append(r)

    failed = [r for r in reports if not r.holds]
    if strict and failed:
        lines = [f"{r.degree_sequence}: min {r.min_value} vs greedy tree "
                 f"{r.greedy_value}, max {r.max_value} vs greedy caterpillar "
                 f"{r.caterpillar_value}, witnesses "
                 f"{r.min_witness.to_dict()} / {r.max_witness.to_dict()}"
                 for r in failed]
        raise TheoremViolation("Extremal trees differ from the constructors "
                               "for:\n" + '\n'.join(lines), report=failed[0])
    return reports
