"""
Distance tree updates
=====================

Walk through how the sampler keeps hop distances to the queries. Node 6
first reaches the queries through 7; when edge (2, 6) arrives, a single
parent change shortens the path for 6 and for everything below it.
"""

import io

from streamcomm import StreamSampler

s = StreamSampler({1, 2, 3})
for u, v in [(1, 7), (7, 6), (6, 8), (3, 4)]:
    s.process_edge(u, v)


def show(label):
    buf = io.StringIO()
    s.tree.dump(buf)
    print(label)
    print("node parent dist")
    print(buf.getvalue())


show("before (2, 6):")
s.process_edge(2, 6)
show("after (2, 6):")

# %%
# An edge between two nodes the sampler has never admitted is rejected,
# but both endpoints still have their stream degree counted.
print("admitted (50, 51)?", s.process_edge(50, 51))
print("degree of 50:", s.degrees[50])
