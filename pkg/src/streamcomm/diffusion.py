"""Lazy random-walk diffusion from the query set over a sampled subgraph.

Each step keeps half of every node's mass in place and spreads the other
half evenly over its neighbours, so total mass is conserved. Nodes without
sampled neighbours keep all of their mass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .sampler import SampledSubgraph

Orientation = Literal["push", "literal"]


@dataclass
class ProbabilityVector:
    nodes: np.ndarray  # ascending node ids
    mass: np.ndarray

    def __getitem__(self, node: int) -> float:
        i = np.searchsorted(self.nodes, node)
        if i == len(self.nodes) or self.nodes[i] != node:
            raise KeyError(node)
        return float(self.mass[i])

    def __len__(self) -> int:
        return len(self.nodes)

    def total(self) -> float:
        return float(self.mass.sum())

    def as_dict(self) -> dict[int, float]:
        return dict(zip(self.nodes.tolist(), self.mass.tolist()))


class WalkOperator:
    """CSR view of a subgraph; built once and reused for every step."""

    def __init__(self, g: SampledSubgraph):
        self.nodes = np.array(sorted(g.adj), dtype=np.int64)
        index = {v: i for i, v in enumerate(self.nodes.tolist())}
        self.degree = np.fromiter((len(g.adj[v]) for v in self.nodes.tolist()), dtype=np.int64, count=len(self.nodes))
        self.indptr = np.zeros(len(self.nodes) + 1, dtype=np.int64)
        np.cumsum(self.degree, out=self.indptr[1:])
        self.indices = np.fromiter(
            (index[w] for v in self.nodes.tolist() for w in sorted(g.adj[v])),
            dtype=np.int64,
            count=int(self.indptr[-1]),
        )
        self.rows = np.repeat(np.arange(len(self.nodes)), self.degree)
        self.isolated = self.degree == 0

    def apply(self, mass: np.ndarray, orientation: Orientation = "push") -> np.ndarray:
        n = len(self.nodes)
        deg = self.degree
        if orientation == "push":
            share = np.zeros(n)
            np.divide(mass, deg, out=share, where=~self.isolated)
            moved = np.bincount(self.indices, weights=share[self.rows], minlength=n)
        elif orientation == "literal":
            # row-stochastic (I + D^-1 A)/2 times a column vector; not mass-conserving
            gathered = np.bincount(self.rows, weights=mass[self.indices], minlength=n)
            moved = np.zeros(n)
            np.divide(gathered, deg, out=moved, where=~self.isolated)
        else:
            raise ValueError(f"unknown orientation {orientation!r}")
        out = 0.5 * mass + 0.5 * moved
        out[self.isolated] = mass[self.isolated]
        return out


def init_distribution(queries: Iterable[int], nodes: Iterable[int]) -> ProbabilityVector:
    queries = set(queries)
    node_arr = np.array(sorted(nodes), dtype=np.int64)
    missing = queries.difference(node_arr.tolist())
    if missing:
        raise KeyError(f"query nodes not in the subgraph: {sorted(missing)}")
    mass = np.zeros(len(node_arr))
    mass[np.isin(node_arr, list(queries))] = 1.0 / len(queries)
    return ProbabilityVector(node_arr, mass)


def step(g: SampledSubgraph, p: ProbabilityVector, orientation: Orientation = "push") -> ProbabilityVector:
    op = WalkOperator(g)
    if not np.array_equal(op.nodes, p.nodes):
        raise ValueError("probability vector is not defined over the subgraph's nodes")
    return ProbabilityVector(op.nodes, op.apply(p.mass, orientation))


def diffuse(g: SampledSubgraph, queries: Iterable[int], k: int, orientation: Orientation = "push") -> ProbabilityVector:
    """``k`` lazy-walk steps starting from mass spread evenly over ``queries``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    p = init_distribution(queries, g.adj)
    if k == 0:
        return p
    op = WalkOperator(g)
    mass = p.mass
    for _ in range(k):
        mass = op.apply(mass, orientation)
    return ProbabilityVector(op.nodes, mass)
