"""Construction of generalized Petersen graphs and their circulant contractions.

Vertex indexing is fixed globally: in ``GPG(n,s)`` the outer ring vertex u_i is
``i`` and the inner vertex v_i is ``n + i``; in ``C_n(1,s)`` vertex i is ``i``.
Every distance formula and every oracle in this package addresses vertices
through this convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

OUTER = "outer"
INNER = "inner"
SPOKE = "spoke"
EDGE_CLASSES = frozenset({OUTER, INNER, SPOKE})


def normalize_s(n: int, s: int) -> int:
    """Map the skip parameter into [2, (n-1)//2] via the n-s mirror symmetry.

    GPG(n,s) and GPG(n,n-s) are the same graph up to relabeling the inner
    ring, so only the smaller representative is ever built. n = 2s is
    rejected outright: the inner "ring" degenerates into parallel edges and
    the graph is no longer cubic.
    """
    if n < 5:
        raise ValueError(f"need n >= 5, got n={n}")
    if s < 2 or s > n - 2:
        raise ValueError(f"need 2 <= s <= n-2, got s={s} for n={n}")
    if 2 * s == n:
        raise ValueError(f"s = n/2 is not a valid skip (n={n}, s={s})")
    return s if s <= (n - 1) // 2 else n - s


@dataclass(frozen=True)
class GpgParams:
    """Validated (n, s) for a generalized Petersen graph; s already normalized."""

    n: int
    s: int

    def __post_init__(self) -> None:
        if self.n < 5:
            raise ValueError(f"need n >= 5, got n={self.n}")
        if not 2 <= self.s <= (self.n - 1) // 2:
            raise ValueError(
                f"need 2 <= s <= (n-1)//2 after normalization, got s={self.s} for n={self.n}"
            )


@dataclass(frozen=True)
class CirculantParams:
    """Validated (n, s) for C_n(1,s); same bounds as GpgParams."""

    n: int
    s: int

    def __post_init__(self) -> None:
        if self.n < 5:
            raise ValueError(f"need n >= 5, got n={self.n}")
        if not 2 <= self.s <= (self.n - 1) // 2:
            raise ValueError(
                f"need 2 <= s <= (n-1)//2 after normalization, got s={self.s} for n={self.n}"
            )


@dataclass(frozen=True)
class DerivedCase:
    """Quotient/remainder data derived from (n, s): n = lam*s + gamma, s = a*gamma + b.

    ``a`` and ``b`` only exist when gamma > 0.
    """

    n: int
    s: int
    lam: int
    gamma: int
    a: int | None
    b: int | None


def derive_case(n: int, s: int) -> DerivedCase:
    lam, gamma = divmod(n, s)
    if gamma > 0:
        a, b = divmod(s, gamma)
    else:
        a = b = None
    return DerivedCase(n=n, s=s, lam=lam, gamma=gamma, a=a, b=b)


@dataclass(frozen=True)
class AdjacencyGraph:
    """Immutable undirected graph: sorted neighbor tuples plus an edge-class map.

    ``edge_classes`` is keyed by (min(u,v), max(u,v)) and carries one of
    ``OUTER``/``INNER``/``SPOKE`` for graphs built by this package. Treat
    instances as frozen; nothing in the package mutates them after
    construction.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_classes: dict[tuple[int, int], str] = field(default_factory=dict)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.vertex_count):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)


def _graph_from_edges(
    vertex_count: int, classed_edges: dict[tuple[int, int], str]
) -> AdjacencyGraph:
    nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in classed_edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(ns)) for ns in nbrs)
    return AdjacencyGraph(
        vertex_count=vertex_count, adjacency=adjacency, edge_classes=classed_edges
    )


def build_gpg(p: GpgParams) -> AdjacencyGraph:
    """Cubic graph on 2n vertices: outer ring, inner skip ring, and spokes."""
    n, s = p.n, p.s
    edges: dict[tuple[int, int], str] = {}
    for i in range(n):
        j = (i + 1) % n
        edges[(min(i, j), max(i, j))] = OUTER
    for i in range(n):
        j = (i + s) % n
        edges[(min(n + i, n + j), max(n + i, n + j))] = INNER
    for i in range(n):
        edges[(i, n + i)] = SPOKE
    return _graph_from_edges(2 * n, edges)


def build_circulant(p: CirculantParams) -> AdjacencyGraph:
    """4-regular graph on Z_n: vertex i adjacent to i±1 (outer) and i±s (inner)."""
    n, s = p.n, p.s
    edges: dict[tuple[int, int], str] = {}
    for i in range(n):
        j = (i + 1) % n
        edges[(min(i, j), max(i, j))] = OUTER
    for i in range(n):
        j = (i + s) % n
        edges[(min(i, j), max(i, j))] = INNER
    return _graph_from_edges(n, edges)


def contract_spokes(g: AdjacencyGraph, p: GpgParams) -> AdjacencyGraph:
    """Merge u_i and v_i into w_i = i; spokes vanish, parallel edges collapse.

    The result is edge-identical to ``build_circulant`` on the same
    parameters (outer edges stay outer, inner edges land on ±s chords). No
    self-loop can arise because s >= 2.
    """
    n = p.n
    if g.vertex_count != 2 * n:
        raise ValueError(
            f"graph has {g.vertex_count} vertices, expected {2 * n} for n={n}"
        )
    edges: dict[tuple[int, int], str] = {}
    for (u, v), cls in g.edge_classes.items():
        if cls == SPOKE:
            continue
        cu, cv = u % n, v % n
        if cu == cv:
            continue
        edges[(min(cu, cv), max(cu, cv))] = cls
    return _graph_from_edges(n, edges)


def expand_to_gpg(p: CirculantParams) -> AdjacencyGraph:
    """Inverse of spoke contraction under the fixed indexing.

    Splitting each w_i into the spoke pair (u_i, v_i), with outer edges kept
    on the u-ring and chords moved to the v-ring, reproduces build_gpg
    vertex for vertex, so the expansion is constructed directly.
    """
    return build_gpg(GpgParams(p.n, p.s))
