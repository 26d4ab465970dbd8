"""Edge-stream and ground-truth file handling.

Edge lists follow the SNAP ``ungraph.txt`` layout: one undirected edge per
line as two whitespace-separated integers, ``#`` comment lines allowed.
Community files hold one community per line.
"""

from __future__ import annotations

import json
import logging
import os
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


class Skip:
    """Marker for an edge-list line that carries no edge."""

    __slots__ = ("reason",)

    def __init__(self, reason: str):
        self.reason = reason

    def __repr__(self) -> str:
        return f"Skip({self.reason!r})"


SKIP = Skip("comment")
SELF_LOOP = Skip("self-loop")


class ParseError(ValueError):
    """Malformed line in an edge list or community file."""

    def __init__(self, message: str, lineno: Optional[int] = None, path: Optional[str] = None):
        self.lineno = lineno
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if lineno is not None:
            where += f"{lineno}: "
        elif where:
            where += " "
        super().__init__(where + message)


def parse_edge_line(line: str, lineno: Optional[int] = None) -> Edge | Skip:
    """Parse one edge-list line.

    Returns ``(u, v)``, :data:`SKIP` for comments and blank lines, or
    :data:`SELF_LOOP` for ``u u`` lines (dropped; :class:`EdgeReader`
    counts them and logs one warning per file).
    """
    s = line.strip()
    if not s or s.startswith("#"):
        return SKIP
    parts = s.split()
    if len(parts) != 2:
        raise ParseError(f"expected 2 node ids, got {len(parts)} tokens", lineno)
    try:
        u = int(parts[0])
        v = int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer node id in {s!r}", lineno) from None
    if u < 0 or v < 0:
        raise ParseError(f"negative node id in {s!r}", lineno)
    if u == v:
        return SELF_LOOP
    return u, v


class EdgeReader:
    """Line-at-a-time iterator over the edges of an edge-list file.

    The file is read sequentially exactly once. ``position`` is the byte
    offset consumed so far and only ever grows, ``lines_read`` counts raw
    lines and ``self_loops`` the dropped self-loop lines.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)
        self.lines_read = 0
        self.edges_read = 0
        self.self_loops = 0
        self.position = 0
        self.passes = 0

    def __iter__(self) -> Iterator[Edge]:
        if self.passes:
            raise RuntimeError(f"stream {self.path} already consumed")
        self.passes += 1
        with open(self.path, "rb") as fh:
            for raw in fh:
                self.lines_read += 1
                self.position += len(raw)
                try:
                    edge = parse_edge_line(raw.decode("utf-8"))
                except ParseError as exc:
                    raise ParseError(str(exc), self.lines_read, self.path) from None
                if isinstance(edge, Skip):
                    if edge is SELF_LOOP:
                        self.self_loops += 1
                    continue
                self.edges_read += 1
                yield edge
        if self.self_loops:
            logger.warning("%s: dropped %d self-loop lines", self.path, self.self_loops)


def iter_edges(path: str | os.PathLike) -> Iterator[Edge]:
    return iter(EdgeReader(path))


@dataclass
class CommunityTable:
    communities: list[frozenset[int]]
    source: str = ""

    def __len__(self) -> int:
        return len(self.communities)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.communities[i]


def load_communities(path: str | os.PathLike, min_size: int = 20) -> CommunityTable:
    """Read a ground-truth community file, dropping communities below
    ``min_size`` nodes (and empty lines). File order is kept."""
    path = os.fspath(path)
    kept = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            tokens = line.split()
            if not tokens or tokens[0].startswith("#"):
                continue
            try:
                members = frozenset(int(t) for t in tokens)
            except ValueError:
                raise ParseError("non-integer node id", lineno, path) from None
            if len(members) >= max(min_size, 1):
                kept.append(members)
    return CommunityTable(kept, path)


def shuffle_stream(in_path: str | os.PathLike, seed: int, out_path: str | os.PathLike) -> int:
    """Write a seeded uniform permutation of the edges of ``in_path``.

    This is offline preprocessing: the whole edge list is held in memory,
    unlike the detection pipeline. Returns the number of edges written.
    """
    edges = list(iter_edges(in_path))
    random.Random(seed).shuffle(edges)
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.writelines(f"{u}\t{v}\n" for u, v in edges)
    return len(edges)


def write_edges(edges: Iterable[Edge], path: str | os.PathLike) -> int:
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in edges:
            fh.write(f"{u}\t{v}\n")
            n += 1
    return n


@dataclass
class TestCase:
    community_index: int
    truth: frozenset[int]
    queries: tuple[int, ...]

    # not a pytest class
    __test__ = False

    def to_json(self) -> str:
        return json.dumps(
            {
                "community_index": self.community_index,
                "truth": sorted(self.truth),
                "queries": list(self.queries),
            }
        )

    @classmethod
    def from_json(cls, line: str) -> "TestCase":
        obj = json.loads(line)
        return cls(int(obj["community_index"]), frozenset(obj["truth"]), tuple(obj["queries"]))


def select_test_cases(table: CommunityTable, n: int = 500, q: int = 3, seed: int = 0) -> list[TestCase]:
    """Pick ``min(n, len(table))`` communities without replacement and ``q``
    distinct query nodes from each."""
    if q < 1:
        raise ValueError("q must be >= 1")
    rng = random.Random(seed)
    m = min(n, len(table))
    chosen = sorted(rng.sample(range(len(table)), m))
    cases = []
    for idx in chosen:
        truth = table[idx]
        if q > len(truth):
            raise ValueError(f"community {idx} has {len(truth)} nodes, fewer than q={q}")
        queries = tuple(rng.sample(sorted(truth), q))
        cases.append(TestCase(idx, truth, queries))
    return cases


def write_test_cases(cases: Iterable[TestCase], path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for case in cases:
            fh.write(case.to_json() + "\n")


def read_test_cases(path: str | os.PathLike) -> list[TestCase]:
    with open(path, encoding="utf-8") as fh:
        return [TestCase.from_json(line) for line in fh if line.strip()]
