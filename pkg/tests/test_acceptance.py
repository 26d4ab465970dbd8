"""Exit criteria for the toolkit, one test per criterion.

A PASS/FAIL line per criterion is printed in the pytest terminal summary.
Criterion 7 needs the SNAP Amazon files (``com-amazon.ungraph.txt`` and
``com-amazon.top5000.cmty.txt``) in ``$STREAMCOMM_DATA`` (default
``<repo>/data``).
"""

import io
import json
import os
import random
import statistics
import time
from contextlib import redirect_stdout
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

from streamcomm import oracle
from streamcomm.cli import main as cli_main
from streamcomm.diffusion import diffuse
from streamcomm.evaluation import run_batch
from streamcomm.extractor import ExtractionConfig
from streamcomm.sampler import SamplerConfig, StreamSampler
from streamcomm.scoring import CommunityCandidate, approx_conductance, local_conductance, sweep
from streamcomm.streamio import CommunityTable, EdgeReader, TestCase, load_communities, select_test_cases, write_edges
from streamcomm.synthetic import planted_partition, random_graph_edges, shuffled
from tests.helpers import make_graph, random_edges

DATA_DIR = Path(os.environ.get("STREAMCOMM_DATA", Path(__file__).resolve().parents[1] / "data"))


def test_criterion_1_fig3_metric_triple():
    t0 = time.perf_counter()
    # exact conductance on a graph with cut 8, Vol(C) 40, larger complement
    internal = list(combinations(range(7), 2))[:16]
    leaving = [(i % 7, 100 + i) for i in range(8)]
    outside = list(combinations(range(100, 108), 2))
    adj = oracle.adjacency(internal + leaving + outside)
    c = set(range(7))
    assert (oracle.cut_size(adj, c), oracle.volume(adj, c)) == (8, 40)
    assert oracle.volume(adj, set(adj) - c) > 40
    assert oracle.exact_conductance(c, adj) == pytest.approx(0.20, abs=1e-12)
    assert oracle.conductance_from_counts(8, 40, 10**6) == pytest.approx(0.20, abs=1e-12)

    assert local_conductance(CommunityCandidate(subgraph_volume=33, internal_edges=15)) == pytest.approx(3 / 33, abs=1e-12)
    assert approx_conductance(CommunityCandidate(volume=40, internal_edges=15)) == 0.25
    assert time.perf_counter() - t0 < 1.0


def test_criterion_2_oracle_equivalences():
    t0 = time.perf_counter()
    for seed in range(100):
        rng = random.Random(seed)
        n = rng.randint(2, 50)
        g = make_graph(random_edges(rng, n, rng.uniform(0.02, 0.4)), nodes=range(n))
        queries = rng.sample(range(n), min(n, rng.randint(1, 3)))
        k = rng.randint(0, 6)

        # (a) sparse diffusion vs dense operator power
        got = diffuse(g, queries, k).as_dict()
        ref = oracle.dense_diffuse(g.adj, queries, k)
        assert max(abs(got[v] - ref[v]) for v in ref) <= 1e-12

        # (b) incremental sweep vs from-scratch recount
        d = {v: g.degree(v) + rng.randrange(4) for v in g.nodes}
        order = list(range(n))
        rng.shuffle(order)
        b = rng.randint(1, n + 3)
        res = sweep(order, queries, b, g, d)
        assert (res.community, res.score, res.index) == oracle.exhaustive_sweep(order, queries, b, g.adj, d)

        # (c) with every edge observed, approx conductance is cut / Vol(C)
        full = {v: g.degree(v) for v in g.nodes}
        c = set(rng.sample(range(n), rng.randint(1, n)))
        cand = CommunityCandidate.build(sorted(c), g, full)
        vol = oracle.volume(g.adj, c)
        expected = oracle.cut_size(g.adj, c) / vol if vol else 1.0
        assert approx_conductance(cand) == expected
    assert time.perf_counter() - t0 < 10.0


def test_criterion_3_distance_tree_soundness():
    t0 = time.perf_counter()
    checkpoints = 0
    for seed in range(200):
        rng = random.Random(seed)
        n = rng.randint(5, 40)
        edges = random_edges(rng, n, rng.uniform(0.05, 0.3))
        rng.shuffle(edges)
        queries = set(rng.sample(range(n), rng.randint(1, 3)))
        k = rng.randint(1, 4)
        cfg = SamplerConfig(k=k, prune_cycle=rng.randint(1, 20), prune_size=len(queries) + rng.randint(0, 10))
        s = StreamSampler(queries, cfg)
        for e in edges:
            s.process_edge(*e)
            s.check_invariants()  # parent-edge, symmetry, closure, budget
            exact = oracle.bfs_dist(s.subgraph.adj, queries)
            for v in s.subgraph.nodes:
                assert exact[v] <= s.tree.dist(v) <= k
            checkpoints += 1
    assert checkpoints > 10_000
    assert time.perf_counter() - t0 < 30.0


@pytest.fixture(scope="module")
def million_edge_stream(tmp_path_factory):
    path = tmp_path_factory.mktemp("stream") / "m1.txt"
    write_edges(random_graph_edges(50_000, 1_000_000, seed=1).tolist(), path)
    return path


def test_criterion_4_streaming_budget(million_edge_stream):
    t0 = time.perf_counter()
    cfg = SamplerConfig(k=4, prune_cycle=100_000, prune_size=3_000)
    cap = cfg.prune_size + 2 * cfg.prune_cycle
    reader = EdgeReader(million_edge_stream)
    s = StreamSampler([0, 1, 2], cfg)
    last = 0
    n = 0
    for u, v in reader:
        assert reader.position > last
        last = reader.position
        s.process_edge(u, v)
        assert s.subgraph.num_nodes <= cap
        n += 1
    assert n == 1_000_000
    assert reader.passes == 1
    assert reader.position == million_edge_stream.stat().st_size
    assert s.prunes == 10
    # the budget was actually under pressure
    assert s.peak_nodes > cfg.prune_size
    assert len(s.degrees) <= 50_000
    assert time.perf_counter() - t0 < 60.0


def test_criterion_5_linear_time(tmp_path):
    small, large = tmp_path / "x1.txt", tmp_path / "x2.txt"
    write_edges(random_graph_edges(25_000, 500_000, seed=3).tolist(), small)
    write_edges(random_graph_edges(50_000, 1_000_000, seed=3).tolist(), large)

    def timed(path):
        runs = []
        for _ in range(5):
            t = time.perf_counter()
            StreamSampler([0, 1, 2]).feed(EdgeReader(path))
            runs.append(time.perf_counter() - t)
        return statistics.median(runs)

    t1, t2 = timed(small), timed(large)
    print(f"sampling median: 1x {t1:.2f}s, 2x {t2:.2f}s, ratio {t2 / t1:.2f}")
    assert t2 <= 2.5 * t1


def _planted_cases(communities, n_cases, seed):
    table = CommunityTable(communities)
    cases = []
    r = 0
    while len(cases) < n_cases:
        cases += select_test_cases(table, n=n_cases - len(cases), q=3, seed=seed * 1000 + r)
        r += 1
    return cases


def test_criterion_6_planted_partition_end_to_end():
    t0 = time.perf_counter()
    edges, communities = planted_partition(10, 30, 0.3, 0.01, seed=0)
    stream = [tuple(e) for e in shuffled(edges, seed=0).tolist()]
    cases = _planted_cases(communities, 50, seed=0)
    assert len(cases) == 50
    records, summary = run_batch(stream, cases)
    print(f"planted partition mean F1 {summary['mean_f1']:.3f} ± {summary['stderr_f1']:.3f}")
    assert time.perf_counter() - t0 < 60.0
    assert summary["mean_f1"] >= 0.95


def test_criterion_7_amazon_scoring_ablation():
    graph = DATA_DIR / "com-amazon.ungraph.txt"
    cmty = DATA_DIR / "com-amazon.top5000.cmty.txt"
    if not (graph.exists() and cmty.exists()):
        pytest.fail(f"SNAP Amazon files not found in {DATA_DIR} (set STREAMCOMM_DATA)")
    table = load_communities(cmty, min_size=20)
    assert len(table) == 936
    from streamcomm.streamio import shuffle_stream

    stream = DATA_DIR / "com-amazon.shuffled-0.txt"
    if not stream.exists():
        shuffle_stream(graph, 0, stream)
    cases = select_test_cases(table, n=100, q=3, seed=0)
    means = {}
    for mode in ("approx", "local", "truth-size"):
        _, summary = run_batch(stream, cases, SamplerConfig(), ExtractionConfig(mode=mode))
        means[mode] = summary["mean_f1"]
    print("Amazon mean F1:", json.dumps(means))
    assert means["truth-size"] - means["approx"] <= 0.15
    assert means["approx"] - means["local"] >= 0.10


def test_criterion_8_batch_matches_single_runs(tmp_path):
    t0 = time.perf_counter()
    edges, communities = planted_partition(6, 25, 0.3, 0.02, seed=5)
    path = tmp_path / "stream.txt"
    write_edges(shuffled(edges, seed=5).tolist(), path)
    cases = _planted_cases(communities, 10, seed=5)
    flags = ["--prune-cycle", "300", "--prune-size", "60"]
    cfg = SamplerConfig(prune_cycle=300, prune_size=60)
    records, _ = run_batch(path, cases, cfg)
    for case, rec in zip(cases, records):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli_main(["detect", "--stream", str(path), "--query", ",".join(map(str, case.queries))] + flags)
        assert code == 0
        single = json.loads(buf.getvalue())
        assert single["community"] == rec.detected
        assert single["score"] == rec.score
        assert single["index"] == rec.index
    assert time.perf_counter() - t0 < 60.0
