import pytest
import wixtree.oracle.extremal as extremal
from wixtree.errors import TheoremViolation, TooLarge
from wixtree.oracle import all_degree_sequences, extremal_scan, verify_theorems
from wixtree.trees import (DegreeSequence, degree_sequence_of,
                           wiener_edges, wiener_pairwise)


@pytest.fixture(scope='module')
def reports():
    return verify_theorems(10, strict=False)


def test_sweep(reports):
    assert len(reports) == len(all_degree_sequences(10)) == 68
    for r in reports:
        ds = r.degree_sequence
        assert degree_sequence_of(r.min_witness) == ds
        assert degree_sequence_of(r.max_witness) == ds
        assert wiener_pairwise(r.min_witness) == r.min_value
        assert wiener_edges(r.max_witness) == r.max_value
        assert r.min_value <= r.greedy_value
        assert r.caterpillar_value <= r.max_value
        assert 1 <= r.distinct_count <= r.labeled_count
        assert r.co_extremal_counts['min'] >= 1
        assert r.co_extremal_counts['max'] >= 1


def test_greedy_tree_is_minimum(reports):
    for r in reports:
        assert r.greedy_matches_min, str(r.degree_sequence)


def test_greedy_caterpillar_up_to_9(reports):
    for r in reports:
        if r.degree_sequence.n <= 9:
            assert r.caterpillar_matches_max, str(r.degree_sequence)
            assert r.holds


def test_caterpillar_counterexample(reports):
    # Spine 4, 3, 2, 3 gives 123; spine 4, 2, 3, 3 reaches 124
    r, = [r for r in reports if r.degree_sequence.degrees == (4, 3, 3, 2)]
    assert r.caterpillar_value == 123
    assert r.max_value == 124
    assert r.greedy_matches_min
    assert not r.caterpillar_matches_max
    assert not r.holds
    d = r.to_dict()
    assert d['degree_sequence'] == [4, 3, 3, 2]
    assert d['n'] == 10
    assert d['max_witness']['n'] == 10
    assert not d['caterpillar_matches_max']


def test_distinct_counts(reports):
    def total(n):
        return sum(r.distinct_count for r in reports
                   if r.degree_sequence.n == n)
    assert [total(n) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23,
                                                47, 106]


def test_small_sequences():
    r = extremal_scan(DegreeSequence(()))
    assert (r.min_value, r.max_value) == (1, 1)
    assert r.labeled_count == r.distinct_count == 1
    r = extremal_scan(DegreeSequence((), n=1))
    assert (r.min_value, r.max_value) == (0, 0)
    assert r.holds

    r = extremal_scan(DegreeSequence((3, 3, 2)))
    assert r.labeled_count == 30
    assert r.distinct_count == 2
    assert (r.min_value, r.max_value) == (46, 48)
    assert r.holds


def test_jobs():
    ds = DegreeSequence((3, 3, 2, 2))
    serial = extremal_scan(ds, jobs=1)
    parallel = extremal_scan(ds, jobs=2)
    assert serial.to_dict() == parallel.to_dict()


def test_strict(monkeypatch):
    ds = DegreeSequence((4, 3, 3, 2))
    monkeypatch.setattr(extremal, 'all_degree_sequences', lambda n: [ds])
    with pytest.raises(TheoremViolation) as e:
        verify_theorems(10)
    assert e.value.report.degree_sequence == ds
    assert '{4,3,3,2}' in str(e.value)
    reports = verify_theorems(10, strict=False)
    assert not reports[0].holds


def test_too_large():
    with pytest.raises(TooLarge):
        verify_theorems(13)
    with pytest.raises(TooLarge):
        extremal_scan(DegreeSequence((3, 3, 2)), cap=10)
    with pytest.raises(TooLarge):
        extremal_scan(DegreeSequence((2,) * 30))
