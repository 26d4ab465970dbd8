import random

from streamcomm.sampler import SampledSubgraph


def make_graph(edges, nodes=()):
    g = SampledSubgraph(nodes)
    for u, v in edges:
        g.add_edge(u, v)
    return g


def random_edges(rng: random.Random, n: int, p: float):
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def two_cliques(size=10):
    """Two disjoint ``size``-cliques joined by one bridge edge."""
    a = list(range(size))
    b = list(range(size, 2 * size))
    edges = [(u, v) for grp in (a, b) for i, u in enumerate(grp) for v in grp[i + 1 :]]
    edges.append((size - 1, size))
    return edges, set(a), set(b)
