"""
Batch evaluation from the command line
======================================

Write an edge list and a ground-truth file, then drive ``streamcomm eval``
and ``streamcomm detect`` exactly as one would from a shell.
"""

import json
import tempfile
from contextlib import redirect_stdout
from io import StringIO
from pathlib import Path

from streamcomm.cli import main
from streamcomm.streamio import write_edges
from streamcomm.synthetic import planted_partition

workdir = Path(tempfile.mkdtemp())
edges, communities = planted_partition(6, 30, p_in=0.4, p_out=0.005, seed=3)
write_edges(edges.tolist(), workdir / "graph.txt")
(workdir / "cmty.txt").write_text("".join(" ".join(map(str, sorted(c))) + "\n" for c in communities))

# %%
# streamcomm eval --stream graph.txt --communities cmty.txt --cases 6 --repetitions 2
main([
    "eval", "--stream", str(workdir / "graph.txt"), "--communities", str(workdir / "cmty.txt"),
    "--cases", "6", "--repetitions", "2", "--out", str(workdir / "records.jsonl"),
])
summaries = [json.loads(x) for x in (workdir / "records.jsonl").read_text().splitlines() if "mean_f1" in x]
print([round(s["mean_f1"], 3) for s in summaries])

# %%
# streamcomm detect --stream graph.txt --query 0,1,2
buf = StringIO()
with redirect_stdout(buf):
    main(["detect", "--stream", str(workdir / "graph.txt"), "--query", "0,1,2"])
out = json.loads(buf.getvalue())
print(out["size"], out["score"], out["community"][:10], "...")
