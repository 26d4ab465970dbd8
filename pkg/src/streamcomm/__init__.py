"""Local community detection over single-pass graph edge streams.

Sample the k-hop neighbourhood of a few query nodes while the stream goes
by, then grow the community on the sample with a lazy random walk and a
conductance sweep that uses exact stream-counted degrees.
"""

from .distance_tree import DistanceTree
from .diffusion import ProbabilityVector, diffuse
from .evaluation import CaseRecord, f1, run_batch, run_experiment
from .extractor import DetectionResult, ExtractionConfig, SamplingFailure, extract
from .sampler import SampledSubgraph, SamplerConfig, StreamSampler, broadcast, sample_stream
from .scoring import CommunityCandidate, approx_conductance, local_conductance, sweep
from .streamio import (
    CommunityTable,
    EdgeReader,
    ParseError,
    TestCase,
    iter_edges,
    load_communities,
    parse_edge_line,
    select_test_cases,
    shuffle_stream,
)


def detect(stream, queries, sampler_config=None, extraction_config=None) -> DetectionResult:
    """Sample ``stream`` around ``queries`` and extract their community."""
    sampler_config = sampler_config or SamplerConfig()
    extraction_config = extraction_config or ExtractionConfig(k=sampler_config.k)
    if isinstance(stream, str):
        stream = EdgeReader(stream)
    g, degrees = sample_stream(stream, queries, sampler_config)
    return extract(g, degrees, queries, extraction_config)


__version__ = "0.1.0"
