"""Edge-by-edge construction of the disconnection distribution.

Distributions are carried as integer counts ``d[k]`` of disconnecting
k-subsets; ``P_k = d[k] / C(M, k)`` is only formed on request. Both update
rules are then plain integer additions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple, Optional

from .cutsets import SubsetCountTable, count_table
from .errors import InconsistentDistribution, NegativeCount, NotConnected, SizeMismatch
from .graph import BASE_GRAPH, Chord, ConstructionScript, Graph, Leaf, apply_step, is_connected


@dataclass(frozen=True)
class KDistribution:
    """Distribution of K for a connected graph with ``m`` edges and ``n_vertices`` vertices."""

    m: int
    n_vertices: int
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if len(self.d) != self.m + 1:
            raise SizeMismatch(f"expected {self.m + 1} counts, got {len(self.d)}")

    def binom(self, k: int) -> int:
        return comb(self.m, k)

    def p(self, k: int) -> Fraction:
        """P(K <= k); zero below 1 and one above M."""
        if k <= 0:
            return Fraction(0)
        if k > self.m:
            return Fraction(1)
        return Fraction(self.d[k], comb(self.m, k))

    def cdf(self) -> list[Fraction]:
        """[P_0, P_1, ..., P_M]."""
        return [self.p(k) for k in range(self.m + 1)]

    def pmf(self) -> list[Fraction]:
        """[p_1, ..., p_M] with p_k = P_k - P_{k-1}."""
        return [self.p(k) - self.p(k - 1) for k in range(1, self.m + 1)]

    def saturation_index(self) -> int:
        """Smallest k from which P_k = 1 must hold (too few edges survive to connect)."""
        return max(1, self.m - self.n_vertices + 2)

    def check(self) -> None:
        """Raise if the counts break a structural invariant."""
        m, d = self.m, self.d
        if d[0] != 0:
            raise InconsistentDistribution("d[0] must be 0")
        for k in range(m + 1):
            if not 0 <= d[k] <= comb(m, k):
                raise InconsistentDistribution(f"d[{k}]={d[k]} outside [0, C({m},{k})]")
        for k in range(m):
            if d[k + 1] * (k + 1) < d[k] * (m - k):
                raise InconsistentDistribution(f"P not monotone at k={k}")
        for k in range(self.saturation_index(), m + 1):
            if d[k] != comb(m, k):
                raise InconsistentDistribution(f"P_{k} must be 1 for k >= {self.saturation_index()}")


def base_distribution() -> KDistribution:
    return KDistribution(1, 2, (0, 1))


def _finish(m: int, n: int, d: list[int]) -> KDistribution:
    d[m] = 1
    # once P_{k-1} = 1 every larger subset disconnects too
    for k in range(2, m + 1):
        if d[k - 1] == comb(m, k - 1) and d[k] != comb(m, k):
            raise InconsistentDistribution(f"count at k={k} does not saturate after P_{k - 1} = 1")
    dist = KDistribution(m, n, tuple(d))
    dist.check()
    return dist


def step_leaf(h: KDistribution) -> KDistribution:
    """Add a pendant edge: d_G[k] = d_H[k] + C(M-1, k-1)."""
    m = h.m + 1
    d = [0] * (m + 1)
    for k in range(1, m):
        d[k] = h.d[k] + comb(m - 1, k - 1)
    return _finish(m, h.n_vertices + 1, d)


def step_chord(h: KDistribution, n: SubsetCountTable) -> KDistribution:
    """Add an edge between existing vertices: d_G[k] = d_H[k] + d_H[k-1] - n[k].

    ``n`` is the two-component separation table of the pre-chord graph for
    the chord endpoints.
    """
    if n.graph_m != h.m:
        raise SizeMismatch(f"separation table is for {n.graph_m} edges, distribution has {h.m}")
    m = h.m + 1
    d = [0] * (m + 1)
    for k in range(1, m):
        if n[k] > h.d[k]:
            raise NegativeCount(f"n[{k}]={n[k]} exceeds {h.d[k]} disconnected sets")
        d[k] = h.d[k] + h.d[k - 1] - n[k]
    return _finish(m, h.n_vertices, d)


class BuildResult(NamedTuple):
    dist: KDistribution
    graph: Graph


def build_distribution(script: ConstructionScript) -> BuildResult:
    """Fold the script's steps over the single-edge base distribution."""
    g, dist = BASE_GRAPH, base_distribution()
    for step in script.steps:
        if isinstance(step, Leaf):
            g = apply_step(g, step)
            dist = step_leaf(dist)
        elif isinstance(step, Chord):
            nxt = apply_step(g, step)
            dist = step_chord(dist, count_table(g, uv=(step.u, step.v)))
            g = nxt
        else:
            raise TypeError(f"not a construction step: {step!r}")
    return BuildResult(dist, g)


def graph_kind(g: Graph) -> Optional[str]:
    """``"tree"``, ``"cycle"`` or None for a connected graph."""
    if g.m == g.n_vertices - 1:
        return "tree"
    if g.n_vertices >= 3 and all(g.degree(v) == 2 for v in range(g.n_vertices)):
        return "cycle"
    return None


def closed_form(g: Graph) -> Optional[KDistribution]:
    """Distribution for trees and cycles without enumeration; None otherwise."""
    if g.n_vertices < 2 or not is_connected(g):
        raise NotConnected("closed_form requires a connected graph with at least two vertices")
    kind = graph_kind(g)
    if kind is None:
        return None
    m = g.m
    first = 1 if kind == "tree" else 2
    d = [comb(m, k) if k >= first else 0 for k in range(m + 1)]
    return KDistribution(m, g.n_vertices, tuple(d))
