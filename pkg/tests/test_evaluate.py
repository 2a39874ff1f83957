import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from editclust import (ClusterConfig, GenSpec, PreconditionError, UnsupportedError, batch_experiment,
                       evaluate, make_unit_cost_model, mismatch_count)
from editclust.evaluate import DEFAULT_BINS, bin_of


def test_identical_labels():
    assert mismatch_count([0, 1, 1, 0], [0, 1, 1, 0], 2) == (0, (0, 1))


def test_swapped_ids():
    count, perm = mismatch_count([1, 0, 0, 1], [0, 1, 1, 0], 2)
    assert count == 0 and perm == (1, 0)


def test_hand_counted_confusion():
    truth = [0, 0, 0, 1, 1, 1, 2, 2, 2, 2]
    pred = [1, 1, 0, 2, 2, 2, 0, 0, 0, 1]
    # best map: predicted 0->2, 1->0, 2->1 leaves two points off
    assert mismatch_count(pred, truth, 3) == (2, (2, 0, 1))


def test_k_limit_and_validation():
    with pytest.raises(UnsupportedError):
        mismatch_count([0], [0], 9)
    with pytest.raises(PreconditionError):
        mismatch_count([0, 1], [0], 2)
    with pytest.raises(PreconditionError):
        mismatch_count([2], [0], 2)


labelings = st.integers(1, 4).flatmap(lambda k: st.tuples(
    st.just(k),
    st.lists(st.tuples(st.integers(0, k - 1), st.integers(0, k - 1)), min_size=1, max_size=30)))


def partition(labels):
    groups = {}
    for i, c in enumerate(labels):
        groups.setdefault(c, set()).add(i)
    return {frozenset(g) for g in groups.values()}


@settings(max_examples=200, deadline=None)
@given(labelings, st.randoms(use_true_random=False))
def test_relabel_invariance(data, rnd):
    k, pairs = data
    pred = [p for p, _ in pairs]
    truth = [t for _, t in pairs]
    perm = list(range(k))
    rnd.shuffle(perm)
    assert mismatch_count(pred, truth, k)[0] == mismatch_count([perm[p] for p in pred], truth, k)[0]


@settings(max_examples=200, deadline=None)
@given(labelings)
def test_zero_iff_same_partition(data):
    k, pairs = data
    pred = [p for p, _ in pairs]
    truth = [t for _, t in pairs]
    assert (mismatch_count(pred, truth, k)[0] == 0) == (partition(pred) == partition(truth))


@settings(max_examples=200, deadline=None)
@given(labelings)
def test_brute_force_agrees(data):
    k, pairs = data
    pred = [p for p, _ in pairs]
    truth = [t for _, t in pairs]
    brute = min(sum(perm[p] != t for p, t in zip(pred, truth)) for perm in itertools.permutations(range(k)))
    report = evaluate(pred, truth, k)
    assert report.misclustered == brute
    assert report.misclustered <= len(truth)
    assert report.accuracy + report.misclustered / len(truth) == 1


def test_bins():
    assert [bin_of(c) for c in (0, 1, 5, 6, 20, 21, 100, 101, 5000)] == \
        ["0", "1-5", "1-5", "6-20", "6-20", "21-100", "21-100", ">100", ">100"]
    assert len(DEFAULT_BINS) == 5


def test_report_histogram_single_bin():
    report = evaluate([0, 0, 1], [0, 1, 1], 2)
    assert report.per_category_histogram == {"0": 0, "1-5": 1, "6-20": 0, "21-100": 0, ">100": 0}
    assert "misclustered: 1" in report.format()


def config():
    return ClusterConfig(k=2, cost=make_unit_cost_model("01"), restarts=3, rng_seed=5)


def test_single_sample_histogram():
    res = batch_experiment([GenSpec(m=40, rng_seed=1)], config(), 1)
    hist = res.histogram()
    assert sum(c for _, _, c in hist) == 1
    assert res.histogram_csv().splitlines()[0] == "spec_id,bin,count"
    assert len(res.detail_csv().splitlines()) == 2


def test_zero_overlap_concentrates_at_zero():
    res = batch_experiment([GenSpec(m=60, rng_seed=10)], config(), 20)
    assert dict((b, c) for _, b, c in res.histogram())["0"] >= 19


def test_batch_uses_spec_k():
    spec = GenSpec(m=45, k_true=3, rng_seed=2)
    res = batch_experiment([spec], config(), 2)
    assert all(s.misclustered == 0 for s in res.samples)


def test_batch_parallel_matches_serial():
    specs = [GenSpec(m=30, rng_seed=3), GenSpec(m=30, overlap_fraction=0.2, rng_seed=4)]
    serial = batch_experiment(specs, config(), 3)
    parallel = batch_experiment(specs, config(), 3, workers=2)
    assert serial.detail_csv() == parallel.detail_csv()
    assert serial.histogram_csv() == parallel.histogram_csv()
