from fractions import Fraction as Fr

import numpy as np
import pytest

from catalog import BASE_GRAPH, G4, TRIANGLE, cycle
from netkofn.errors import BadK, InvalidParameter, NotConnected
from netkofn.graph import Graph
from netkofn.montecarlo import chunk_rng, estimate_failure, estimate_pk, sample_k_subsets
from netkofn.recurrence import closed_form
from netkofn.reliability import ConstantP, Exponential, system_failure_prob


def test_pk_exact_cases():
    assert estimate_pk(TRIANGLE, 2, 2000, seed=1).mean == 1.0
    assert estimate_pk(TRIANGLE, 1, 2000, seed=1).mean == 0.0
    assert estimate_pk(G4, 0, 500, seed=3).mean == 0.0
    assert estimate_pk(G4, 4, 500, seed=3).mean == 1.0


def test_pk_g4_close_to_quarter():
    est = estimate_pk(G4, 1, 100_000, seed=42)
    assert abs(est.mean - 0.25) <= est.half_width


def test_failure_single_edge():
    est = estimate_failure(BASE_GRAPH, ConstantP(0.3), 0.0, 50_000, seed=5)
    assert abs(est.mean - 0.3) <= est.half_width


def test_failure_triangle_half():
    exact = system_failure_prob(closed_form(TRIANGLE), Fr(1, 2))
    est = estimate_failure(TRIANGLE, ConstantP(0.5), 0.0, 100_000, seed=9)
    assert abs(est.mean - float(exact)) <= est.half_width


def test_failure_zero_cdf():
    assert estimate_failure(cycle(5), Exponential(2.0), 0.0, 5000, seed=0).mean == 0.0
    assert estimate_failure(cycle(5), ConstantP(0.0), 1.0, 5000, seed=0).mean == 0.0


def test_reproducible_and_worker_independent():
    a = estimate_pk(G4, 2, 150_000, seed=77)
    b = estimate_pk(G4, 2, 150_000, seed=77)
    c = estimate_pk(G4, 2, 150_000, seed=77, workers=3)
    assert a == b == c
    x = estimate_failure(TRIANGLE, ConstantP(0.4), 0.0, 140_000, seed=3)
    y = estimate_failure(TRIANGLE, ConstantP(0.4), 0.0, 140_000, seed=3, workers=2)
    assert x == y


def test_subset_sampler_sizes_and_uniformity():
    masks = sample_k_subsets(chunk_rng(0, 0), 5, 2, 50_000)
    assert set(np.bitwise_count(masks).tolist()) == {2}
    counts = np.unique(masks, return_counts=True)[1]
    assert len(counts) == 10
    # each of the 10 pairs expected 5000 times; sd is about 67
    assert np.all(np.abs(counts - 5000) < 400)


def test_coverage_over_seeds():
    exact = 0.25
    hits = 0
    for seed in range(100):
        est = estimate_pk(G4, 1, 2000, seed=seed)
        hits += abs(est.mean - exact) <= est.half_width
    assert hits >= 90


def test_errors():
    with pytest.raises(NotConnected):
        estimate_pk(Graph(3, ((0, 1),)), 1, 10, seed=0)
    with pytest.raises(BadK):
        estimate_pk(TRIANGLE, 4, 10, seed=0)
    with pytest.raises(InvalidParameter):
        estimate_pk(TRIANGLE, 1, 0, seed=0)
