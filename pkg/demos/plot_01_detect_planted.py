"""
Detecting a planted community from an edge stream
=================================================

Build a planted-partition graph, shuffle its edges into a stream, sample the
neighbourhood of three query nodes in one pass and grow their community.
"""

import numpy as np

from streamcomm import SamplerConfig, StreamSampler, extract, f1
from streamcomm.synthetic import planted_partition, shuffled

# 8 communities of 40 nodes; dense inside, sparse across
edges, communities = planted_partition(8, 40, p_in=0.35, p_out=0.005, seed=1)
stream = [tuple(e) for e in shuffled(edges, seed=1).tolist()]
print(f"{len(stream)} edges in the stream")

truth = communities[2]
rng = np.random.default_rng(0)
queries = rng.choice(sorted(truth), size=3, replace=False).tolist()

# %%
# One pass over the stream. The sampler never sees an edge twice.
sampler = StreamSampler(queries, SamplerConfig(k=4))
sampler.feed(stream)
g = sampler.subgraph
print(f"sampled {g.num_nodes} nodes / {g.num_edges} edges; degrees known for {len(sampler.degrees)} nodes")

# %%
# Diffuse from the queries and sweep approximate conductance.
result = extract(g, sampler.degrees, queries)
score, precision, recall = f1(result.community, truth)
print(f"detected {len(result.community)} nodes, conductance {result.score:.3f}")
print(f"F1 {score:.3f} (precision {precision:.3f}, recall {recall:.3f})")
