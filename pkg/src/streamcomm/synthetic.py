"""Seeded synthetic graphs for fixtures and benchmarks."""

from __future__ import annotations

import numpy as np


def planted_partition(n_communities: int, size: int, p_in: float, p_out: float, seed: int = 0):
    """Planted-partition graph on ``n_communities * size`` nodes.

    Returns ``(edges, communities)``: edges as an ``(m, 2)`` int array with
    ``u < v`` in lexicographic order, communities as a list of frozensets.
    """
    rng = np.random.default_rng(seed)
    n = n_communities * size
    block = np.arange(n) // size
    iu, iv = np.triu_indices(n, k=1)
    prob = np.where(block[iu] == block[iv], p_in, p_out)
    keep = rng.random(len(iu)) < prob
    edges = np.column_stack([iu[keep], iv[keep]]).astype(np.int64)
    communities = [frozenset(range(c * size, (c + 1) * size)) for c in range(n_communities)]
    return edges, communities


def random_graph_edges(n_nodes: int, n_edges: int, seed: int = 0) -> np.ndarray:
    """``n_edges`` distinct uniformly random edges on ``n_nodes`` nodes,
    returned in random order (an already-shuffled stream)."""
    if n_edges > n_nodes * (n_nodes - 1) // 2:
        raise ValueError("too many edges for a simple graph")
    rng = np.random.default_rng(seed)
    seen: set[tuple[int, int]] = set()
    out = []
    while len(out) < n_edges:
        batch = rng.integers(0, n_nodes, size=(2 * (n_edges - len(out)) + 16, 2))
        for u, v in batch.tolist():
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            out.append((u, v))
            if len(out) == n_edges:
                break
    return np.array(out, dtype=np.int64)


def shuffled(edges: np.ndarray, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return edges[rng.permutation(len(edges))]
