"""Graph invariants and export formats for comparing graphs across descriptions."""

from __future__ import annotations

import json
from collections import deque

from .gamma import GammaGraph

__all__ = [
    "DisconnectedGraphError",
    "degree_sequence",
    "edge_count",
    "is_connected",
    "diameter",
    "export_dot",
    "graph_report",
    "export_report",
]


class DisconnectedGraphError(ValueError):
    """Raised when an invariant needs a connected graph."""


def degree_sequence(g: GammaGraph) -> list[int]:
    """Vertex degrees as a multiset, sorted ascending."""
    counts = {v: 0 for v in g.vertices}
    for u, w in g.edges:
        counts[u] += 1
        counts[w] += 1
    return sorted(counts.values())


def edge_count(g: GammaGraph) -> int:
    return len(g.edges)


def _adjacency(g: GammaGraph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, w in g.edges:
        adj[u].append(w)
        adj[w].append(u)
    return adj


def _distances_from(adj: dict[int, list[int]], start: int) -> dict[int, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def is_connected(g: GammaGraph) -> bool:
    adj = _adjacency(g)
    return len(_distances_from(adj, g.vertices[0])) == len(g.vertices)


def diameter(g: GammaGraph) -> int:
    """Greatest distance between any two vertices; errors when disconnected."""
    adj = _adjacency(g)
    best = 0
    for v in g.vertices:
        dist = _distances_from(adj, v)
        if len(dist) != len(g.vertices):
            raise DisconnectedGraphError("diameter is undefined on a disconnected graph")
        best = max(best, max(dist.values()))
    return best


def _sorted_edge_labels(g: GammaGraph) -> list[tuple[str, str]]:
    pairs = [(str(g.labels[u]), str(g.labels[w])) for u, w in g.edges]
    return sorted(pairs)


def export_dot(g: GammaGraph) -> str:
    """DOT text with canonical-word node names, deterministically ordered."""
    lines = ["graph gamma {"]
    for v in g.vertices:
        lines.append(f'  "{g.labels[v]}";')
    for a, b in _sorted_edge_labels(g):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_report(g: GammaGraph) -> dict:
    """Plain-data summary of one graph, ready for JSON serialization."""
    connected = is_connected(g)
    return {
        "policy": g.policy.to_string(),
        "order": len(g.vertices),
        "vertices": [str(g.labels[v]) for v in g.vertices],
        "edges": [[a, b] for a, b in _sorted_edge_labels(g)],
        "edge_count": edge_count(g),
        "degree_sequence": degree_sequence(g),
        "connected": connected,
        "diameter": diameter(g) if connected else None,
    }


def export_report(g: GammaGraph) -> str:
    """JSON rendering of graph_report; byte-stable for identical inputs."""
    return json.dumps(graph_report(g), indent=2, sort_keys=True) + "\n"
