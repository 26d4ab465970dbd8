"""Conductance scores for candidate communities and the prefix sweep."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .sampler import SampledSubgraph


@dataclass
class CommunityCandidate:
    """Node set plus the running counters both conductance variants need.

    ``volume`` sums global stream degrees, ``subgraph_volume`` sums sampled
    degrees and ``internal_edges`` counts sampled edges inside the set.
    """

    members: set[int] = field(default_factory=set)
    volume: int = 0
    internal_edges: int = 0
    subgraph_volume: int = 0

    @property
    def subgraph_cut(self) -> int:
        return self.subgraph_volume - 2 * self.internal_edges

    def extend(self, v: int, g: SampledSubgraph, degrees: Mapping[int, int]) -> "CommunityCandidate":
        """Add ``v`` in O(deg_s(v)); mutates and returns ``self``."""
        if v in self.members:
            raise ValueError(f"node {v} is already a member")
        nbrs = g.adj[v]
        members = self.members
        if len(nbrs) <= len(members):
            inside = sum(1 for w in nbrs if w in members)
        else:
            inside = sum(1 for w in members if w in nbrs)
        members.add(v)
        self.volume += degrees.get(v, 0)
        self.internal_edges += inside
        self.subgraph_volume += len(nbrs)
        return self

    @classmethod
    def build(cls, nodes: Iterable[int], g: SampledSubgraph, degrees: Mapping[int, int]) -> "CommunityCandidate":
        c = cls()
        for v in nodes:
            if v not in c.members:
                c.extend(v, g, degrees)
        return c


def approx_conductance(c: CommunityCandidate) -> float:
    """Cut estimated from exact stream degrees minus sampled internal edges,
    over the exact volume. Empty volume scores 1.0."""
    if c.volume == 0:
        return 1.0
    return (c.volume - 2 * c.internal_edges) / c.volume


def local_conductance(c: CommunityCandidate) -> float:
    """Conductance measured purely inside the sampled subgraph."""
    if c.subgraph_volume == 0:
        return 1.0
    return c.subgraph_cut / c.subgraph_volume


Scorer = Callable[[CommunityCandidate], float]

SCORERS: dict[str, Scorer] = {
    "approx": approx_conductance,
    "local": local_conductance,
}


@dataclass
class SweepResult:
    community: frozenset[int]
    score: float
    index: int
    scores: list[float]


def sweep(
    order: Sequence[int],
    queries: Iterable[int],
    b: int,
    g: SampledSubgraph,
    degrees: Mapping[int, int],
    scorer: Scorer = approx_conductance,
) -> SweepResult:
    """Score every prefix ``order[:i] + queries`` for ``i = 1..min(b, len(order))``
    and keep the lowest (earliest on ties)."""
    if not order:
        raise ValueError("empty node order")
    if b < 1:
        raise ValueError("b must be >= 1")
    queries = list(queries)
    cand = CommunityCandidate.build(queries, g, degrees)
    best_score = float("inf")
    best_i = 0
    scores = []
    for i, v in enumerate(order[: min(b, len(order))], 1):
        if v not in cand.members:
            cand.extend(v, g, degrees)
        s = scorer(cand)
        scores.append(s)
        if s < best_score:
            best_score, best_i = s, i
    community = frozenset(order[:best_i]) | frozenset(queries)
    return SweepResult(community, best_score, best_i, scores)
