"""Community extraction on a sampled subgraph: diffuse, rank, cut."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

import numpy as np

from .diffusion import Orientation, diffuse
from .sampler import SampledSubgraph
from .scoring import SCORERS, CommunityCandidate, approx_conductance, sweep

MODES = ("approx", "local", "truth-size")


class SamplingFailure(KeyError):
    """A query node is missing from the sampled subgraph."""


@dataclass(frozen=True)
class ExtractionConfig:
    k: int = 4
    max_size: int = 500
    mode: str = "approx"
    truth_size: Optional[int] = None

    def validate(self, n_queries: int = 1) -> None:
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.max_size < 1:
            raise ValueError("max_size must be >= 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "truth-size":
            if self.truth_size is None:
                raise ValueError("truth-size mode needs truth_size")
            if self.truth_size < n_queries:
                raise ValueError("truth_size is smaller than the query set")


@dataclass
class DetectionResult:
    community: frozenset[int]
    score: float
    index: int
    mass: dict[int, float] = field(default_factory=dict)

    def sorted_community(self) -> list[int]:
        return sorted(self.community)


def rank_nodes(g: SampledSubgraph, queries: Iterable[int], k: int, orientation: Orientation = "push") -> tuple[list[int], dict[int, float]]:
    """Subgraph nodes by diffused mass, descending; ties by ascending id."""
    p = diffuse(g, queries, k, orientation)
    idx = np.lexsort((p.nodes, -p.mass))
    order = p.nodes[idx].tolist()
    return order, p.as_dict()


def extract(
    g: SampledSubgraph,
    degrees: Mapping[int, int],
    queries: Iterable[int],
    config: ExtractionConfig = ExtractionConfig(),
    orientation: Orientation = "push",
) -> DetectionResult:
    queries = sorted(set(queries))
    config.validate(len(queries))
    missing = [q for q in queries if q not in g.adj]
    if missing:
        raise SamplingFailure(f"query nodes absent from the sampled subgraph: {missing}")
    order, mass = rank_nodes(g, queries, config.k, orientation)

    if config.mode == "truth-size":
        n = config.truth_size
        community = frozenset(order[:n]) | frozenset(queries)
        score = approx_conductance(CommunityCandidate.build(sorted(community), g, degrees))
        index = min(n, len(order))
    else:
        res = sweep(order, queries, config.max_size, g, degrees, SCORERS[config.mode])
        community, score, index = res.community, res.score, res.index
    return DetectionResult(community, score, index, {v: mass[v] for v in sorted(community)})
