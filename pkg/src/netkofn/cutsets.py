"""Disconnected sets, cut sets and exhaustive subset counts.

Single-subset predicates go through :mod:`netkofn.graph`. Full count
tables label the components of every surviving edge set at once (a doubling
recurrence over bit masks); per-k counts and large graphs instead propagate
vertex reachability over blocks of removal masks. Both are exhaustive.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional

import numpy as np

from .errors import AdjacentEndpoints, BadK, NotConnected, SameVertex, TooManyEdges
from .graph import MAX_ENUM_EDGES, Graph, check_mask, check_vertex, connected_components, is_connected

BLOCK = 1 << 18
# label table is 2**M rows of n_vertices int16
DP_MAX_EDGES = 20


@dataclass(frozen=True)
class SubsetCountTable:
    """``counts[k]`` = number of qualifying k-subsets, k = 0..graph_m."""

    graph_m: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) != self.graph_m + 1:
            raise ValueError("counts must have graph_m + 1 entries")

    def __getitem__(self, k: int) -> int:
        return self.counts[k]


def _require_connected(g: Graph) -> None:
    if g.n_vertices < 2 or not is_connected(g):
        raise NotConnected("expected a connected graph with at least two vertices")


def _require_pair(g: Graph, u: int, v: int) -> None:
    check_vertex(g, u)
    check_vertex(g, v)
    if u == v:
        raise SameVertex(f"u and v are both {u}")


def _require_enumerable(g: Graph) -> None:
    if g.m > MAX_ENUM_EDGES:
        raise TooManyEdges(f"{g.m} edges exceeds the enumeration limit of {MAX_ENUM_EDGES}")


# -- single-subset predicates -------------------------------------------------


def is_disconnected_set(g: Graph, f: int) -> bool:
    _require_connected(g)
    return not is_connected(g, f)


def _proper_maximal_subsets(f: int) -> Iterator[int]:
    bits = f
    while bits:
        low = bits & -bits
        yield f ^ low
        bits ^= low


def is_cut_set(g: Graph, f: int) -> bool:
    """Minimal disconnected set.

    Checking the ``|f|`` subsets of size ``|f|-1`` is enough because
    disconnection is preserved under supersets.
    """
    if not is_disconnected_set(g, f):
        return False
    return not any(not is_connected(g, s) for s in _proper_maximal_subsets(f))


def _separated(g: Graph, f: int, u: int, v: int) -> bool:
    comps = connected_components(g, f)
    return not any(u in c and v in c for c in comps)


def is_uv_disconnected_set(g: Graph, f: int, u: int, v: int) -> bool:
    _require_pair(g, u, v)
    check_mask(g, f)
    return _separated(g, f, u, v)


def is_uv_cut_set(g: Graph, f: int, u: int, v: int) -> bool:
    if not is_uv_disconnected_set(g, f, u, v):
        return False
    return not any(_separated(g, s, u, v) for s in _proper_maximal_subsets(f))


# -- vectorized enumeration ---------------------------------------------------


def reach(g: Graph, removed: np.ndarray, start: int) -> np.ndarray:
    """Vertex bit masks reachable from ``start`` for each removal mask.

    ``removed`` is a uint64 array of edge masks; the result has one uint64
    vertex mask per entry. Requires ``n_vertices <= 64``.
    """
    one = np.uint64(1)
    alive = [((removed >> np.uint64(i)) & one) == 0 for i in range(g.m)]
    bit = [one << np.uint64(x) for x in range(g.n_vertices)]
    r = np.full(removed.shape, bit[start], dtype=np.uint64)
    while True:
        prev = r.copy()
        for i, (a, b) in enumerate(g.edges):
            has_a = (r & bit[a]) != 0
            has_b = (r & bit[b]) != 0
            r |= np.where(alive[i] & has_a, bit[b], np.uint64(0))
            r |= np.where(alive[i] & has_b, bit[a], np.uint64(0))
        if np.array_equal(r, prev):
            return r


def _full_vertex_mask(g: Graph) -> np.uint64:
    return np.uint64((1 << g.n_vertices) - 1)


def _all_masks(m: int) -> Iterator[np.ndarray]:
    total = 1 << m
    for lo in range(0, total, BLOCK):
        yield np.arange(lo, min(total, lo + BLOCK), dtype=np.uint64)


def _k_masks(m: int, k: int) -> Iterator[np.ndarray]:
    buf: list[int] = []
    for combo in combinations(range(m), k):
        mask = 0
        for i in combo:
            mask |= 1 << i
        buf.append(mask)
        if len(buf) == BLOCK:
            yield np.array(buf, dtype=np.uint64)
            buf = []
    if buf:
        yield np.array(buf, dtype=np.uint64)


def disconnecting(g: Graph, masks: np.ndarray) -> np.ndarray:
    """Boolean array: does removing each mask disconnect ``g``."""
    return reach(g, masks, 0) != _full_vertex_mask(g)


def separating(g: Graph, masks: np.ndarray, u: int, v: int) -> np.ndarray:
    """Boolean array: does removing each mask leave exactly two components,
    one holding ``u`` and the other ``v``."""
    ru = reach(g, masks, u)
    rv = reach(g, masks, v)
    apart = (ru & (np.uint64(1) << np.uint64(v))) == 0
    return apart & ((ru | rv) == _full_vertex_mask(g))


def _check_k(g: Graph, k: int) -> None:
    if not 0 <= k <= g.m:
        raise BadK(f"k={k} outside [0, {g.m}]")


def _check_separation_args(g: Graph, u: int, v: int) -> None:
    _require_pair(g, u, v)
    if g.has_edge(u, v):
        raise AdjacentEndpoints(f"vertices {u} and {v} are adjacent")


def count_disconnected_k(g: Graph, k: int) -> int:
    """Number of k-subsets of edges whose removal disconnects ``g``."""
    _require_connected(g)
    _require_enumerable(g)
    _check_k(g, k)
    return sum(int(disconnecting(g, block).sum()) for block in _k_masks(g.m, k))


def count_uv_separations(g: Graph, u: int, v: int, k: int) -> int:
    """Number of k-subsets leaving exactly two components that separate u from v."""
    _require_connected(g)
    _check_separation_args(g, u, v)
    _require_enumerable(g)
    _check_k(g, k)
    return sum(int(separating(g, block, u, v).sum()) for block in _k_masks(g.m, k))


def component_labels(g: Graph) -> np.ndarray:
    """Component labels for every surviving edge set.

    Row ``s`` holds, per vertex, the smallest vertex of its component in the
    graph keeping exactly the edges in bit mask ``s``. Built by doubling:
    rows with top bit ``i`` are rows ``s - 2**i`` merged across edge ``i``.
    """
    labels = np.empty((1 << g.m, g.n_vertices), dtype=np.int16)
    labels[0] = np.arange(g.n_vertices)
    for i, (a, b) in enumerate(g.edges):
        lo = labels[: 1 << i]
        la, lb = lo[:, a : a + 1], lo[:, b : b + 1]
        joined = (lo == la) | (lo == lb)
        labels[1 << i : 2 << i] = np.where(joined, np.minimum(la, lb), lo)
    return labels


def _count_table_dp(g: Graph, uv: Optional[tuple[int, int]]) -> np.ndarray:
    labels = component_labels(g)
    if uv is None:
        hit = (labels != 0).any(axis=1)
    else:
        u, v = uv
        lu, lv = labels[:, u : u + 1], labels[:, v : v + 1]
        hit = (lu[:, 0] != lv[:, 0]) & ((labels == lu) | (labels == lv)).all(axis=1)
    kept = np.bitwise_count(np.arange(1 << g.m, dtype=np.uint64))
    return np.bincount(g.m - kept[hit].astype(np.int64), minlength=g.m + 1)


def count_table(g: Graph, uv: Optional[tuple[int, int]] = None) -> SubsetCountTable:
    """Counts for every k in one pass over all ``2**M`` subsets.

    With ``uv=None`` counts disconnected sets; with ``uv=(u, v)`` counts
    two-component u/v separations.
    """
    _require_connected(g)
    if uv is not None:
        _check_separation_args(g, *uv)
    _require_enumerable(g)
    if g.m <= DP_MAX_EDGES:
        counts = _count_table_dp(g, uv)
    else:
        counts = np.zeros(g.m + 1, dtype=np.int64)
        for block in _all_masks(g.m):
            hit = disconnecting(g, block) if uv is None else separating(g, block, *uv)
            counts += np.bincount(np.bitwise_count(block[hit]), minlength=g.m + 1)
    table = SubsetCountTable(g.m, tuple(counts.tolist()))
    assert all(c <= comb(g.m, k) for k, c in enumerate(table.counts))
    return table
