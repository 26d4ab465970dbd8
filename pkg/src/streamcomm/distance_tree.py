"""Parent-array tree giving each sampled node's hop distance to the query set.

Query nodes hang directly under a dummy root; every other node points at a
neighbour on a (not necessarily shortest) path towards the queries. A node's
distance is its chain length to the root minus one. Depths are not cached, so
moving a node under a closer parent is a single assignment and its whole
subtree picks up the shorter distance on the next walk.
"""

from __future__ import annotations

import math
from typing import Iterable, TextIO

ROOT = -1
INF = math.inf


class TreeInvariantError(AssertionError):
    """Raised when a mutation would break the tree's structural invariants."""


class DistanceTree:
    def __init__(self, queries: Iterable[int], max_depth: int | None = None):
        self.queries = frozenset(queries)
        if not self.queries:
            raise ValueError("query set must be non-empty")
        if ROOT in self.queries:
            raise ValueError(f"node id {ROOT} is reserved for the dummy root")
        self.parent: dict[int, int] = {q: ROOT for q in self.queries}
        # chain-walk guard; None disables it
        self.max_depth = max_depth

    def __contains__(self, v: int) -> bool:
        return v in self.parent

    def __len__(self) -> int:
        return len(self.parent)

    def __iter__(self):
        return iter(self.parent)

    def dist(self, v: int) -> float:
        if v == ROOT:
            raise KeyError("the dummy root has no distance")
        parent = self.parent
        p = parent.get(v)
        if p is None:
            return INF
        d = 0
        limit = self.max_depth
        while p != ROOT:
            p = parent[p]
            d += 1
            if limit is not None and d > limit:
                raise TreeInvariantError(f"parent chain of {v} exceeds {limit} hops")
        return d

    def hypothetical_dist(self, u: int, v: int) -> tuple[float, float]:
        """Distances of ``u`` and ``v`` as if edge ``(u, v)`` were added."""
        du = self.dist(u)
        dv = self.dist(v)
        return min(du, dv + 1), min(dv, du + 1)

    def attach(self, v: int, parent: int) -> None:
        if v in self.parent or v == ROOT:
            raise TreeInvariantError(f"node {v} already in tree")
        if parent not in self.parent:
            raise TreeInvariantError(f"parent {parent} not in tree")
        self.parent[v] = parent

    def reparent(self, v: int, new_parent: int, gap: int | None = None) -> None:
        """Move ``v`` under ``new_parent``. ``gap`` is dist(v) - dist(new_parent)
        when the caller already knows it, saving two chain walks."""
        if v not in self.parent or new_parent not in self.parent:
            raise TreeInvariantError("both nodes must be in the tree")
        if gap is None:
            gap = self.dist(v) - self.dist(new_parent)
        if gap < 2:
            raise TreeInvariantError(f"reparenting {v} under {new_parent} does not shorten its path")
        self.parent[v] = new_parent

    def remove_nodes(self, doomed: Iterable[int]) -> None:
        """Drop ``doomed``; no survivor may have a doomed parent."""
        doomed = set(doomed)
        if doomed & self.queries:
            raise TreeInvariantError("query nodes cannot be removed")
        parent = self.parent
        for v, p in parent.items():
            if p in doomed and v not in doomed:
                raise TreeInvariantError(f"node {v} would lose its parent {p}")
        for v in doomed:
            parent.pop(v, None)

    def distances(self) -> dict[int, int]:
        """All node distances in one memoised pass (O(|tree|))."""
        parent = self.parent
        out: dict[int, int] = {}
        for v in parent:
            chain = []
            x = v
            while x not in out and x != ROOT:
                chain.append(x)
                x = parent[x]
            d = -1 if x == ROOT else out[x]
            for y in reversed(chain):
                d += 1
                out[y] = d
        return out

    def dump(self, fh: TextIO) -> None:
        """Write ``node parent dist`` lines, sorted by node id."""
        dists = self.distances()
        for v in sorted(self.parent):
            fh.write(f"{v} {self.parent[v]} {dists[v]}\n")
