"""Batch evaluation: one stream pass serves every test case, then per-case
extraction and F1 against the ground truth."""

from __future__ import annotations

import dataclasses
import json
import logging
import math
import os
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np

from .extractor import DetectionResult, ExtractionConfig, SamplingFailure, extract
from .sampler import SamplerConfig, StreamSampler, broadcast
from .streamio import EdgeReader, TestCase, load_communities, select_test_cases, shuffle_stream

logger = logging.getLogger(__name__)


def f1(detected: Iterable[int], truth: Iterable[int]) -> tuple[float, float, float]:
    """Set-overlap ``(f1, precision, recall)``."""
    detected, truth = set(detected), set(truth)
    if not detected or not truth:
        raise ValueError("detected and truth sets must be non-empty")
    hit = len(detected & truth)
    if hit == 0:
        return 0.0, 0.0, 0.0
    p = hit / len(detected)
    r = hit / len(truth)
    return 2 * p * r / (p + r), p, r


@dataclass
class CaseRecord:
    case_id: int
    community_index: int
    queries: list[int]
    f1: float
    precision: float
    recall: float
    detected: list[int]
    size: int
    truth_size: int
    score: float
    index: int
    mode: str
    sample_time: float
    extract_time: float
    sampling_failure: bool = False
    error: Optional[str] = None

    def to_json(self, with_times: bool = True) -> str:
        d = dataclasses.asdict(self)
        times = {"sample": d.pop("sample_time"), "extract": d.pop("extract_time")}
        if with_times:
            d["times"] = times
        return json.dumps(d)


def summarize(records: Sequence[CaseRecord]) -> dict:
    """Mean F1 and its standard error (sample std / sqrt(n))."""
    n = len(records)
    if n == 0:
        return {"mean_f1": None, "stderr_f1": None, "n": 0}
    vals = np.array([r.f1 for r in records])
    stderr = float(vals.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return {"mean_f1": float(vals.mean()), "stderr_f1": stderr, "n": n}


def _case_config(base: ExtractionConfig, case: TestCase) -> ExtractionConfig:
    if base.mode == "truth-size":
        return dataclasses.replace(base, truth_size=len(case.truth))
    return base


def run_batch(
    stream,
    cases: Sequence[TestCase],
    sampler_config: SamplerConfig = SamplerConfig(),
    extraction_config: ExtractionConfig = ExtractionConfig(),
    parallel: int = 1,
) -> tuple[list[CaseRecord], dict]:
    """Detect the community of every test case from a single stream pass.

    ``stream`` is an edge-list path or an iterable of ``(u, v)`` pairs; it is
    consumed once regardless of ``len(cases)``.
    """
    if isinstance(stream, (str, os.PathLike)):
        stream = EdgeReader(stream)
    degrees: dict[int, int] = {}
    samplers = [StreamSampler(c.queries, sampler_config, degrees, count_degrees=False) for c in cases]

    t0 = time.perf_counter()
    broadcast(stream, samplers, degrees)
    sample_time = (time.perf_counter() - t0) / max(len(cases), 1)

    def work(i: int) -> CaseRecord:
        case, s = cases[i], samplers[i]
        cfg = _case_config(extraction_config, case)
        t = time.perf_counter()
        error = None
        try:
            res: DetectionResult = extract(s.subgraph, degrees, case.queries, cfg)
        except (SamplingFailure, ValueError) as exc:
            error = str(exc)
            res = DetectionResult(frozenset(case.queries), 1.0, 0)
        ext_time = time.perf_counter() - t
        score_f1, prec, rec = f1(res.community, case.truth)
        return CaseRecord(
            case_id=i,
            community_index=case.community_index,
            queries=list(case.queries),
            f1=score_f1,
            precision=prec,
            recall=rec,
            detected=res.sorted_community(),
            size=len(res.community),
            truth_size=len(case.truth),
            score=res.score,
            index=res.index,
            mode=cfg.mode,
            sample_time=sample_time,
            extract_time=ext_time,
            sampling_failure=s.subgraph.num_edges == 0,
            error=error,
        )

    if parallel > 1 and len(cases) > 1:
        with ThreadPoolExecutor(parallel) as pool:
            records = list(pool.map(work, range(len(cases))))
    else:
        records = [work(i) for i in range(len(cases))]
    for r in records:
        if r.sampling_failure:
            logger.warning("case %d: no edge admitted around queries %s", r.case_id, r.queries)
    return records, summarize(records)


def write_records(fh: TextIO, records: Sequence[CaseRecord], summary: dict, config: dict, with_times: bool = True) -> None:
    for r in records:
        fh.write(r.to_json(with_times) + "\n")
    fh.write(json.dumps({**summary, "config": config}) + "\n")


def run_experiment(
    stream_path: str | os.PathLike,
    communities_path: str | os.PathLike,
    n_cases: int = 500,
    queries_per_case: int = 3,
    seed: int = 0,
    repetitions: int = 1,
    sampler_config: SamplerConfig = SamplerConfig(),
    extraction_config: ExtractionConfig = ExtractionConfig(),
    shuffle: bool = True,
    min_size: int = 20,
    parallel: int = 1,
) -> list[tuple[list[CaseRecord], dict]]:
    """Repeat the protocol ``repetitions`` times: reshuffle the stream (unless
    ``shuffle`` is False) and redraw test cases with seed ``seed + r``."""
    table = load_communities(communities_path, min_size)
    out = []
    for r in range(repetitions):
        rseed = seed + r
        cases = select_test_cases(table, n_cases, queries_per_case, rseed)
        if shuffle:
            with tempfile.TemporaryDirectory() as tmp:
                path = os.path.join(tmp, "stream.txt")
                shuffle_stream(stream_path, rseed, path)
                records, summary = run_batch(path, cases, sampler_config, extraction_config, parallel)
        else:
            records, summary = run_batch(stream_path, cases, sampler_config, extraction_config, parallel)
        summary["repetition"] = r
        summary["seed"] = rseed
        out.append((records, summary))
    return out
