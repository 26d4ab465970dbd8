"""Single-pass sampling of the k-hop neighbourhood of a query set.

Every stream edge bumps the global degree counter. An edge is admitted into
the sampled subgraph when both endpoints would sit within ``k`` hops of the
queries once the edge is added. Every ``prune_cycle`` stream edges the node
set is cut back to the ``prune_size`` nodes closest to the queries.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .distance_tree import INF, DistanceTree, TreeInvariantError

Edge = tuple[int, int]


@dataclass(frozen=True)
class SamplerConfig:
    k: int = 4
    prune_cycle: int = 100_000
    prune_size: int = 3_000
    # carried for provenance; sampling itself is deterministic given stream order
    seed: int = 0

    def validate(self, n_queries: int = 1) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.prune_cycle < 1:
            raise ValueError(f"prune_cycle must be >= 1, got {self.prune_cycle}")
        if self.prune_size < n_queries:
            raise ValueError(f"prune_size {self.prune_size} is smaller than the {n_queries} query nodes")


class SampledSubgraph:
    """Undirected simple graph held as ``node -> set(neighbours)``."""

    def __init__(self, nodes: Iterable[int] = ()):
        self.adj: dict[int, set[int]] = {v: set() for v in nodes}
        self.num_edges = 0

    @property
    def nodes(self):
        return self.adj.keys()

    @property
    def num_nodes(self) -> int:
        return len(self.adj)

    def __contains__(self, v: int) -> bool:
        return v in self.adj

    def add_node(self, v: int) -> None:
        if v not in self.adj:
            self.adj[v] = set()

    def add_edge(self, u: int, v: int) -> bool:
        """Insert ``(u, v)``; returns False if it was already present."""
        if u == v:
            raise ValueError("self-loops are not allowed")
        nu = self.adj.setdefault(u, set())
        if v in nu:
            return False
        nu.add(v)
        self.adj.setdefault(v, set()).add(u)
        self.num_edges += 1
        return True

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def edges(self) -> list[Edge]:
        return sorted((u, v) for u, nbrs in self.adj.items() for v in nbrs if u < v)

    def remove_nodes(self, doomed: Iterable[int]) -> None:
        """Delete nodes and every edge touching them (keeps the induced subgraph)."""
        adj = self.adj
        gone = {v for v in doomed if v in adj}
        removed = 0
        for v in gone:
            for w in adj[v]:
                if w in gone:
                    removed += w > v
                else:
                    adj[w].discard(v)
                    removed += 1
        for v in gone:
            del adj[v]
        self.num_edges -= removed

    def copy(self) -> "SampledSubgraph":
        g = SampledSubgraph()
        g.adj = {v: set(n) for v, n in self.adj.items()}
        g.num_edges = self.num_edges
        return g

    def __eq__(self, other) -> bool:
        return isinstance(other, SampledSubgraph) and self.adj == other.adj

    def __repr__(self) -> str:
        return f"SampledSubgraph(|V|={self.num_nodes}, |E|={self.num_edges})"


class StreamSampler:
    """Incremental stream sampler for one query set.

    ``degrees`` may be shared between samplers fed by the same stream; pass
    ``count_degrees=False`` to every sampler but the one (or the broadcaster)
    that maintains it.
    """

    def __init__(
        self,
        queries: Iterable[int],
        config: SamplerConfig = SamplerConfig(),
        degrees: Optional[dict[int, int]] = None,
        count_degrees: bool = True,
    ):
        queries = frozenset(queries)
        if not queries:
            raise ValueError("query set must be non-empty")
        config.validate(len(queries))
        self.config = config
        self.queries = queries
        # admitted distances never exceed k and later moves only shorten them
        self.tree = DistanceTree(queries, max_depth=config.k + 1)
        self.subgraph = SampledSubgraph(sorted(queries))
        self.degrees: dict[int, int] = {} if degrees is None else degrees
        self.count_degrees = count_degrees
        self.edges_seen = 0
        self.prunes = 0
        self.peak_nodes = self.subgraph.num_nodes

    def process_edge(self, u: int, v: int) -> bool:
        """Consume one stream edge; returns whether it entered the subgraph."""
        self.edges_seen += 1
        if self.count_degrees:
            d = self.degrees
            d[u] = d.get(u, 0) + 1
            d[v] = d.get(v, 0) + 1
        admitted = self.admit(u, v)
        if self.edges_seen % self.config.prune_cycle == 0:
            self.prune()
        return admitted

    def admit(self, u: int, v: int) -> bool:
        """Admission test and tree update for ``(u, v)``; no counters touched."""
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) in stream")
        tree = self.tree
        parent = tree.parent
        if u not in parent and v not in parent:
            return False
        du = tree.dist(u)
        dv = tree.dist(v)
        k = self.config.k
        if min(du, dv + 1) > k or min(dv, du + 1) > k:
            return False
        if du == INF:
            tree.attach(u, v)
        elif dv == INF:
            tree.attach(v, u)
        elif dv - du >= 2:
            tree.reparent(v, u, gap=dv - du)
        elif du - dv >= 2:
            tree.reparent(u, v, gap=du - dv)
        g = self.subgraph
        g.add_edge(u, v)
        if g.num_nodes > self.peak_nodes:
            self.peak_nodes = g.num_nodes
        return True

    def prune(self) -> list[int]:
        """Keep the ``prune_size`` nodes nearest the queries (ties: smaller id).

        Returns the removed nodes.
        """
        ps = self.config.prune_size
        g = self.subgraph
        self.prunes += 1
        if g.num_nodes <= ps:
            return []
        dists = self.tree.distances()
        order = sorted(g.nodes, key=lambda x: (dists[x], x))
        doomed = order[ps:]
        self.tree.remove_nodes(doomed)
        g.remove_nodes(doomed)
        return doomed

    def feed(self, edges: Iterable[Edge]) -> "StreamSampler":
        for u, v in edges:
            self.process_edge(u, v)
        return self

    def check_invariants(self) -> None:
        """Structural self-check used by tests; raises TreeInvariantError."""
        tree, g = self.tree, self.subgraph
        if set(tree.parent) != set(g.adj):
            raise TreeInvariantError("tree nodes and subgraph nodes differ")
        if not self.queries <= set(g.adj):
            raise TreeInvariantError("a query node was dropped")
        for v, p in tree.parent.items():
            if v in self.queries:
                if p != -1:
                    raise TreeInvariantError(f"query {v} is not under the root")
            elif not g.has_edge(v, p):
                raise TreeInvariantError(f"parent link ({p}, {v}) is not a sampled edge")
        for v, nbrs in g.adj.items():
            for w in nbrs:
                if v not in g.adj.get(w, ()):
                    raise TreeInvariantError(f"asymmetric adjacency at ({v}, {w})")
        tree.distances()
        cap = self.config.prune_size + 2 * self.config.prune_cycle
        if g.num_nodes > cap:
            raise TreeInvariantError(f"{g.num_nodes} sampled nodes exceed the {cap} budget")


def sample_stream(
    stream: Iterable[Edge], queries: Iterable[int], config: SamplerConfig = SamplerConfig()
) -> tuple[SampledSubgraph, dict[int, int]]:
    """Run the sampler over a whole stream; returns (subgraph, degree counter)."""
    s = StreamSampler(queries, config)
    s.feed(stream)
    return s.subgraph, s.degrees


def dump_subgraph(g: SampledSubgraph, fh: TextIO, degrees: Optional[dict[int, int]] = None) -> None:
    """Text dump: ``v <count>``, then ``u: n1 n2 ...`` per node, then
    optional ``d u <count>`` degree lines."""
    fh.write(f"v {g.num_nodes}\n")
    for u in sorted(g.adj):
        fh.write(f"{u}: {' '.join(map(str, sorted(g.adj[u])))}".rstrip() + "\n")
    if degrees is not None:
        for u in sorted(degrees):
            fh.write(f"d {u} {degrees[u]}\n")


def load_subgraph(fh: TextIO) -> tuple[SampledSubgraph, dict[int, int]]:
    g = SampledSubgraph()
    degrees: dict[int, int] = {}
    expected = None
    for line in fh:
        line = line.strip()
        if not line:
            continue
        if line.startswith("v "):
            expected = int(line.split()[1])
        elif line.startswith("d "):
            _, u, c = line.split()
            degrees[int(u)] = int(c)
        else:
            head, _, rest = line.partition(":")
            u = int(head)
            g.add_node(u)
            for w in rest.split():
                g.add_edge(u, int(w))
    if expected is not None and expected != g.num_nodes:
        raise ValueError(f"subgraph dump declares {expected} nodes, found {g.num_nodes}")
    return g, degrees


def write_subgraph(path: str | os.PathLike, g: SampledSubgraph, degrees: Optional[dict[int, int]] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        dump_subgraph(g, fh, degrees)


def read_subgraph(path: str | os.PathLike) -> tuple[SampledSubgraph, dict[int, int]]:
    with open(path, encoding="utf-8") as fh:
        return load_subgraph(fh)


def broadcast(stream: Iterable[Edge], samplers: list[StreamSampler], degrees: dict[int, int]) -> int:
    """Drive many samplers from one pass over ``stream``.

    The degree counter is query-independent, so it is maintained here once;
    the samplers must be built with ``count_degrees=False``. Each sampler
    ends in exactly the state it would reach if fed the stream on its own.
    Returns the number of edges consumed.
    """
    if any(s.count_degrees for s in samplers):
        raise ValueError("broadcast samplers must not count degrees themselves")
    cycles = {s.config.prune_cycle for s in samplers}
    i = 0
    for u, v in stream:
        i += 1
        degrees[u] = degrees.get(u, 0) + 1
        degrees[v] = degrees.get(v, 0) + 1
        for s in samplers:
            parent = s.tree.parent
            if u in parent or v in parent:
                s.admit(u, v)
        if any(i % pc == 0 for pc in cycles):
            for s in samplers:
                if i % s.config.prune_cycle == 0:
                    s.prune()
    for s in samplers:
        s.edges_seen += i
    return i
