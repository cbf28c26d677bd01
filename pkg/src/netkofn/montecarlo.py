"""Sampling estimates used to cross-check the exact results.

Samples are drawn in fixed-size chunks. Chunk ``i`` uses a PCG64 stream
seeded from ``SeedSequence(seed, spawn_key=(i,))``, so an estimate depends
only on (inputs, samples, seed) and not on how many workers ran it.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .cutsets import disconnecting
from .errors import BadK, InvalidParameter, NotConnected, TooManyEdges
from .graph import MAX_ENUM_EDGES, Graph, is_connected
from .reliability import EdgeFailureModel, edge_cdf

RNG_NAME = "PCG64"
CHUNK = 1 << 16
Z95 = 1.96


@dataclass(frozen=True)
class McEstimate:
    mean: float
    half_width: float
    samples: int
    seed: int
    rng: str = RNG_NAME

    @property
    def std_error(self) -> float:
        return math.sqrt(self.mean * (1.0 - self.mean) / self.samples)


def chunk_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def _check(g: Graph, samples: int) -> None:
    if g.n_vertices < 2 or not is_connected(g):
        raise NotConnected("sampling requires a connected graph with at least two vertices")
    if g.m > MAX_ENUM_EDGES:
        raise TooManyEdges(f"{g.m} edges exceeds the mask limit of {MAX_ENUM_EDGES}")
    if samples < 1:
        raise InvalidParameter(f"samples must be positive, got {samples}")


def _run(g: Graph, samples: int, seed: int, draw: Callable[[np.random.Generator, int], np.ndarray], workers: int) -> McEstimate:
    sizes = [min(CHUNK, samples - lo) for lo in range(0, samples, CHUNK)]

    def hits(i: int) -> int:
        masks = draw(chunk_rng(seed, i), sizes[i])
        return int(disconnecting(g, masks).sum())

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            total = sum(pool.map(hits, range(len(sizes))))
    else:
        total = sum(hits(i) for i in range(len(sizes)))
    mean = total / samples
    return McEstimate(mean, Z95 * math.sqrt(mean * (1.0 - mean) / samples), samples, seed)


def _weights(m: int) -> np.ndarray:
    return np.uint64(1) << np.arange(m, dtype=np.uint64)


def sample_k_subsets(rng: np.random.Generator, m: int, k: int, size: int) -> np.ndarray:
    """``size`` uniform k-subsets of ``range(m)`` as bit masks (partial Fisher-Yates per row)."""
    perm = np.tile(np.arange(m, dtype=np.int64), (size, 1))
    rows = np.arange(size)
    for i in range(k):
        j = i + rng.integers(0, m - i, size=size)
        picked = perm[rows, j]
        perm[rows, j] = perm[rows, i]
        perm[rows, i] = picked
    chosen = perm[:, :k].astype(np.uint64)
    return np.bitwise_or.reduce(np.uint64(1) << chosen, axis=1) if k else np.zeros(size, dtype=np.uint64)


def estimate_pk(g: Graph, k: int, samples: int, seed: int, workers: int = 1) -> McEstimate:
    """Fraction of uniformly drawn k-subsets whose removal disconnects ``g``."""
    _check(g, samples)
    if not 0 <= k <= g.m:
        raise BadK(f"k={k} outside [0, {g.m}]")
    return _run(g, samples, seed, lambda rng, n: sample_k_subsets(rng, g.m, k, n), workers)


def estimate_failure(g: Graph, model: EdgeFailureModel, t: float, samples: int, seed: int, workers: int = 1) -> McEstimate:
    """Fraction of samples disconnected when each edge fails independently with prob F(t)."""
    _check(g, samples)
    q = float(edge_cdf(model, t))
    w = _weights(g.m)

    def draw(rng: np.random.Generator, n: int) -> np.ndarray:
        failed = rng.random((n, g.m)) < q
        return (failed * w).sum(axis=1, dtype=np.uint64)

    return _run(g, samples, seed, draw, workers)
