"""Simple undirected graphs, connectivity queries and construction scripts.

Edge subsets are plain ``int`` bit masks over a graph's canonical edge
order: bit ``i`` set means edge ``g.edges[i]`` is in the subset (removed).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import (
    AttachVertexMissing,
    ChordEndpointsAdjacent,
    ChordEndpointsEqual,
    DuplicateEdge,
    EmptyEdgeSet,
    IndexOutOfRange,
    LoopEdge,
    NotConnected,
    VertexOutOfRange,
)

Edge = tuple[int, int]

# Brute-force enumeration works on machine-word masks.
MAX_ENUM_EDGES = 63


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n_vertices-1``.

    ``edges`` is canonicalized on construction: each pair is stored as
    ``(u, v)`` with ``u < v`` and the list is sorted.
    """

    n_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        n = self.n_vertices
        if not isinstance(n, int) or n < 0:
            raise VertexOutOfRange(f"vertex count must be a nonnegative integer, got {n!r}")
        canon = []
        for raw in self.edges:
            a, b = (int(x) for x in raw)
            if a == b:
                raise LoopEdge(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise VertexOutOfRange(f"edge ({a}, {b}) outside [0, {n})")
            canon.append((a, b) if a < b else (b, a))
        canon.sort()
        for e1, e2 in zip(canon, canon[1:]):
            if e1 == e2:
                raise DuplicateEdge(f"parallel edge {e1}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise IndexOutOfRange(f"no edge ({u}, {v})") from None

    def mask_of(self, edges: Iterable[Edge]) -> int:
        """Bit mask of the given edges (given as vertex pairs)."""
        mask = 0
        for u, v in edges:
            mask |= 1 << self.edge_index(u, v)
        return mask

    def edges_in(self, mask: int) -> list[Edge]:
        check_mask(self, mask)
        return [e for i, e in enumerate(self.edges) if mask >> i & 1]


def validate(n_vertices: int, raw_edges: Iterable[Sequence[int]]) -> Graph:
    """Canonicalize and check a raw edge list. Connectivity is not required."""
    return Graph(n_vertices, tuple(tuple(e) for e in raw_edges))


def check_mask(g: Graph, removed: int) -> None:
    if removed < 0 or removed >> g.m:
        raise IndexOutOfRange(f"edge subset {removed:#x} does not index a graph with {g.m} edges")


def check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n_vertices:
        raise IndexOutOfRange(f"vertex {v} outside [0, {g.n_vertices})")


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _forest(g: Graph, removed: int) -> tuple[list[int], int]:
    """Union-find over surviving edges; returns (parent, number of merges)."""
    parent = list(range(g.n_vertices))
    merges = 0
    for i, (u, v) in enumerate(g.edges):
        if removed >> i & 1:
            continue
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            merges += 1
    return parent, merges


def is_connected(g: Graph, removed: int = 0) -> bool:
    """True iff ``g`` minus the ``removed`` edges has a single component."""
    check_mask(g, removed)
    if g.n_vertices <= 1:
        return True
    _, merges = _forest(g, removed)
    return merges == g.n_vertices - 1


def connected_components(g: Graph, removed: int = 0) -> list[frozenset[int]]:
    """Components of ``g`` minus ``removed``, ordered by smallest member."""
    check_mask(g, removed)
    parent, _ = _forest(g, removed)
    groups: dict[int, list[int]] = {}
    for v in range(g.n_vertices):
        groups.setdefault(_find(parent, v), []).append(v)
    # vertices are visited in ascending order, so dict order is by smallest member
    return [frozenset(vs) for vs in groups.values()]


def bridges(g: Graph) -> int:
    """Mask of edges whose single removal disconnects ``g`` (iterative Tarjan)."""
    if not is_connected(g):
        raise NotConnected("bridges requires a connected graph")
    n = g.n_vertices
    disc = [-1] * n
    low = [0] * n
    mask = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frame: (vertex, parent edge index, neighbor iterator)
        stack = [(root, -1, iter(g.neighbors[root]))]
        while stack:
            v, pe, it = stack[-1]
            for w in it:
                ei = g.edge_index(v, w)
                if ei == pe:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, ei, iter(g.neighbors[w])))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        mask |= 1 << pe
    return mask


# -- construction scripts ---------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    """Add the next unused vertex, joined to ``attach``."""

    attach: int


@dataclass(frozen=True)
class Chord:
    """Join two existing, non-adjacent vertices."""

    u: int
    v: int


ConstructionStep = Union[Leaf, Chord]

BASE_GRAPH = Graph(2, ((0, 1),))


@dataclass(frozen=True)
class ConstructionScript:
    """Edge-addition steps applied to the single-edge graph ``0-1``."""

    steps: tuple[ConstructionStep, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def graphs(self) -> Iterator[Graph]:
        """Yield the base graph and the graph after every step."""
        g = BASE_GRAPH
        yield g
        for s in self.steps:
            g = apply_step(g, s)
            yield g

    def replay(self) -> Graph:
        g = BASE_GRAPH
        for s in self.steps:
            g = apply_step(g, s)
        return g


def apply_step(g: Graph, s: ConstructionStep) -> Graph:
    if isinstance(s, Leaf):
        if not 0 <= s.attach < g.n_vertices:
            raise AttachVertexMissing(f"leaf attach vertex {s.attach} not in graph")
        new = g.n_vertices
        return Graph(new + 1, g.edges + ((s.attach, new),))
    if isinstance(s, Chord):
        if s.u == s.v:
            raise ChordEndpointsEqual(f"chord endpoints equal ({s.u})")
        for x in (s.u, s.v):
            if not 0 <= x < g.n_vertices:
                raise AttachVertexMissing(f"chord endpoint {x} not in graph")
        if g.has_edge(s.u, s.v):
            raise ChordEndpointsAdjacent(f"vertices {s.u} and {s.v} already adjacent")
        return Graph(g.n_vertices, g.edges + ((s.u, s.v),))
    raise TypeError(f"not a construction step: {s!r}")


class DerivedScript(NamedTuple):
    script: ConstructionScript
    # relabel[old] = new vertex index in the replayed graph
    relabel: tuple[int, ...]


def relabel_graph(g: Graph, relabel: Sequence[int]) -> Graph:
    return Graph(g.n_vertices, tuple((relabel[u], relabel[v]) for u, v in g.edges))


def derive_script(g: Graph) -> DerivedScript:
    """Construction script reproducing ``g`` up to relabeling.

    The spanning tree is taken breadth-first from vertex 0 (neighbors in
    ascending order) and emitted as leaves; the remaining edges follow as
    chords in canonical order of the relabeled graph.
    """
    if g.m == 0:
        raise EmptyEdgeSet("graph has no edges")
    if not is_connected(g):
        raise NotConnected("cannot derive a script for a disconnected graph")
    relabel = [-1] * g.n_vertices
    relabel[0] = 0
    order = [0]
    tree_parent: dict[int, int] = {}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors[v]:
            if relabel[w] == -1:
                relabel[w] = len(order)
                order.append(w)
                tree_parent[w] = v
                queue.append(w)
    steps: list[ConstructionStep] = []
    # order[1] is joined to vertex 0 by the base edge
    for w in order[2:]:
        steps.append(Leaf(relabel[tree_parent[w]]))
    tree = {(min(relabel[w], relabel[p]), max(relabel[w], relabel[p])) for w, p in tree_parent.items()}
    relabeled = relabel_graph(g, relabel)
    steps.extend(Chord(u, v) for u, v in relabeled.edges if (u, v) not in tree)
    return DerivedScript(ConstructionScript(tuple(steps)), tuple(relabel))
