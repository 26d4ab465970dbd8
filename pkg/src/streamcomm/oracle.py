"""Slow, obviously-correct reference computations for tests.

Everything here works on a plain ``{node: set(neighbours)}`` mapping (a
:class:`~streamcomm.sampler.SampledSubgraph` ``.adj`` works too) and makes
no attempt at efficiency.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

DENSE_LIMIT = 500


def adjacency(edges: Iterable[tuple[int, int]], nodes: Iterable[int] = ()) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in nodes}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def bfs_dist(adj: Mapping[int, set[int]], sources: Iterable[int]) -> dict[int, int]:
    """Hop distance from every reachable node to the nearest source."""
    dist = {s: 0 for s in sources}
    queue = deque(dist)
    while queue:
        u = queue.popleft()
        for w in adj.get(u, ()):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def k_hop_induced(adj: Mapping[int, set[int]], sources: Iterable[int], k: int) -> dict[int, set[int]]:
    """Subgraph induced by every node within ``k`` hops of ``sources``."""
    sources = list(sources)
    near = {v for v, d in bfs_dist(adj, sources).items() if d <= k}
    near.update(sources)
    return {v: {w for w in adj.get(v, ()) if w in near} for v in near}


def cut_size(adj: Mapping[int, set[int]], c: set[int]) -> int:
    return sum(1 for u in c for w in adj.get(u, ()) if w not in c)


def volume(adj: Mapping[int, set[int]], c: Iterable[int]) -> int:
    return sum(len(adj.get(u, ())) for u in c)


def exact_conductance(c: Iterable[int], adj: Mapping[int, set[int]]) -> float:
    """cut(C, V-C) / min(Vol(C), Vol(V-C)) on a fully loaded graph."""
    c = set(c)
    if not c or not set(adj) - c:
        raise ValueError("C must be a non-empty proper subset of V")
    rest = set(adj) - c
    return conductance_from_counts(cut_size(adj, c), volume(adj, c), volume(adj, rest))


def conductance_from_counts(cut: int, vol_c: int, vol_rest: int) -> float:
    denom = min(vol_c, vol_rest)
    if denom == 0:
        return 1.0
    return cut / denom


def transition_matrix(adj: Mapping[int, set[int]], orientation: str = "push") -> tuple[list[int], np.ndarray]:
    """Dense lazy-walk operator. ``push`` is column-stochastic (I + A D^-1)/2;
    ``literal`` is the row-stochastic (I + D^-1 A)/2. Isolated nodes get a
    unit diagonal either way."""
    nodes = sorted(adj)
    n = len(nodes)
    if n > DENSE_LIMIT:
        raise ValueError(f"dense oracle limited to {DENSE_LIMIT} nodes, got {n}")
    pos = {v: i for i, v in enumerate(nodes)}
    a = np.zeros((n, n))
    for u in nodes:
        for w in adj[u]:
            a[pos[u], pos[w]] = 1.0
    deg = a.sum(axis=1)
    m = np.eye(n)
    for j in range(n):
        if deg[j] == 0:
            continue
        if orientation == "push":
            m[:, j] = 0.5 * np.eye(n)[:, j] + 0.5 * a[:, j] / deg[j]
        elif orientation == "literal":
            m[j, :] = 0.5 * np.eye(n)[j, :] + 0.5 * a[j, :] / deg[j]
        else:
            raise ValueError(orientation)
    return nodes, m


def dense_diffuse(adj: Mapping[int, set[int]], queries: Iterable[int], k: int, orientation: str = "push") -> dict[int, float]:
    nodes, m = transition_matrix(adj, orientation)
    queries = set(queries)
    p = np.array([1.0 / len(queries) if v in queries else 0.0 for v in nodes])
    for _ in range(k):
        p = m @ p
    return dict(zip(nodes, p.tolist()))


def approx_conductance_of(c: set[int], adj: Mapping[int, set[int]], degrees: Mapping[int, int]) -> float:
    vol = sum(degrees.get(v, 0) for v in c)
    if vol == 0:
        return 1.0
    internal = sum(1 for u in c for w in adj.get(u, ()) if w in c) // 2
    return (vol - 2 * internal) / vol


def local_conductance_of(c: set[int], adj: Mapping[int, set[int]], degrees: Mapping[int, int] | None = None) -> float:
    vol = volume(adj, c)
    if vol == 0:
        return 1.0
    return cut_size(adj, c) / vol


def exhaustive_sweep(
    order: Sequence[int],
    queries: Iterable[int],
    b: int,
    adj: Mapping[int, set[int]],
    degrees: Mapping[int, int],
    score: Callable[[set[int], Mapping[int, set[int]], Mapping[int, int]], float] = approx_conductance_of,
) -> tuple[frozenset[int], float, int]:
    """Recount every prefix candidate from scratch; earliest minimum wins."""
    queries = set(queries)
    best = None
    for i in range(1, min(b, len(order)) + 1):
        c = set(order[:i]) | queries
        s = score(c, adj, degrees)
        if best is None or s < best[1]:
            best = (frozenset(c), s, i)
    return best
