"""Distance-based vertex metrics: BFS distances and eccentricities."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph_core import Graph, GraphError

__all__ = [
    "DisconnectedGraphError",
    "EccentricityProfile",
    "all_pairs_distances",
    "bfs_distances",
    "eccentricity_profile",
    "is_connected",
]


class DisconnectedGraphError(GraphError):
    """Raised where a computation requires a connected graph."""


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Hop distances from ``source``; ``None`` marks unreachable vertices."""
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} out of range [0, {g.n})")
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> list[list[int | None]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def is_connected(g: Graph) -> bool:
    return all(d is not None for d in bfs_distances(g, 0))


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[int, ...]
    zeta: int
    e1: int

    @property
    def radius(self) -> int:
        return min(self.ecc)

    @property
    def diameter(self) -> int:
        return max(self.ecc)

    @property
    def is_self_centered(self) -> bool:
        return self.radius == self.diameter


def eccentricity_profile(g: Graph) -> EccentricityProfile:
    """Per-vertex eccentricities, total eccentricity and their sum of squares.

    The lone vertex of K1 has eccentricity 0. Disconnected graphs raise
    :class:`DisconnectedGraphError`.
    """
    ecc = []
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if any(d is None for d in dist):
            raise DisconnectedGraphError("eccentricity requires a connected graph")
        ecc.append(max(dist))
    return EccentricityProfile(tuple(ecc), sum(ecc), sum(e * e for e in ecc))
