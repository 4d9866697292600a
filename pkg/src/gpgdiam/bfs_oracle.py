"""Brute-force BFS ground truth for distances, eccentricities and diameters.

Everything here is deliberately formula-free so it can act as an independent
trust anchor for the closed-form engine. ``graph_diameter`` is a plain
O(V*E) all-sources scan; the ``*_by_bfs`` helpers shave that to one or two
BFS runs using vertex symmetries, which the unit suite checks against the
full scan.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core_graphs import (
    EDGE_CLASSES,
    AdjacencyGraph,
    CirculantParams,
    GpgParams,
    build_circulant,
    build_gpg,
)


class GraphError(Exception):
    """Structural failure: the requested computation needs a connected graph."""


@dataclass(frozen=True)
class DistanceVector:
    """Hop counts from one source; unreachable vertices hold None."""

    source: int
    dist: tuple[int | None, ...]


@dataclass(frozen=True)
class DiameterWitness:
    value: int
    endpoints: tuple[int, int]


def bfs_distances(g: AdjacencyGraph, source: int) -> DistanceVector:
    """Exact unweighted shortest-path hop counts from ``source``."""
    if not 0 <= source < g.vertex_count:
        raise ValueError(f"source {source} out of range for {g.vertex_count} vertices")
    dist: list[int | None] = [None] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            if dist[v] is None:
                dist[v] = du + 1
                queue.append(v)
    return DistanceVector(source=source, dist=tuple(dist))


def restricted_bfs(
    g: AdjacencyGraph, source: int, allowed_edges: frozenset[str] | set[str]
) -> DistanceVector:
    """BFS over the subgraph induced by the given edge classes.

    ``allowed_edges`` must be a subset of {outer, inner, spoke}; the graph
    must have been built by this package so its edge classes are recorded.
    """
    unknown = set(allowed_edges) - EDGE_CLASSES
    if unknown:
        raise ValueError(f"unknown edge class(es): {sorted(unknown)}")
    if not 0 <= source < g.vertex_count:
        raise ValueError(f"source {source} out of range for {g.vertex_count} vertices")
    allowed = set(allowed_edges)
    dist: list[int | None] = [None] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            key = (u, v) if u < v else (v, u)
            if g.edge_classes[key] not in allowed:
                continue
            if dist[v] is None:
                dist[v] = du + 1
                queue.append(v)
    return DistanceVector(source=source, dist=tuple(dist))


def source_eccentricity(g: AdjacencyGraph, source: int) -> int:
    """Max distance from ``source``; raises GraphError if anything is unreachable."""
    dv = bfs_distances(g, source)
    ecc = 0
    for d in dv.dist:
        if d is None:
            raise GraphError(f"graph is disconnected (unreachable from {source})")
        if d > ecc:
            ecc = d
    return ecc


def graph_diameter(g: AdjacencyGraph) -> DiameterWitness:
    """All-sources BFS diameter with a deterministic witness pair.

    The witness is the lexicographically smallest (source, target) pair
    attaining the maximum: sources are scanned in ascending order, only a
    strictly larger eccentricity replaces the current witness, and within a
    source the smallest target at that eccentricity is taken.
    """
    best = -1
    witness = (0, 0)
    for source in range(g.vertex_count):
        dv = bfs_distances(g, source)
        ecc = 0
        for d in dv.dist:
            if d is None:
                raise GraphError(f"graph is disconnected (unreachable from {source})")
            if d > ecc:
                ecc = d
        if ecc > best:
            best = ecc
            witness = (source, dv.dist.index(ecc))
    return DiameterWitness(value=best, endpoints=witness)


def circulant_diameter_by_bfs(p: CirculantParams) -> int:
    """BFS diameter of C_n(1,s) via one run: rotation makes it vertex-transitive,
    so the eccentricity of vertex 0 is already the diameter."""
    return source_eccentricity(build_circulant(p), 0)


def gpg_diameter_by_bfs(p: GpgParams) -> int:
    """BFS diameter of GPG(n,s) via two runs.

    The rotation u_i -> u_{i+1}, v_i -> v_{i+1} is an automorphism with
    exactly two vertex orbits (outer ring, inner ring), so the diameter is
    the larger of the eccentricities of u_0 and v_0.
    """
    g = build_gpg(p)
    return max(source_eccentricity(g, 0), source_eccentricity(g, p.n))
