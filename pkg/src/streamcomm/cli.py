"""Command-line entry point: ``streamcomm {shuffle,detect,eval}``.

Machine-readable JSON goes to stdout (or ``--out``); human-readable
summaries and errors go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import evaluation, streamio
from .extractor import ExtractionConfig, SamplingFailure, extract
from .sampler import SamplerConfig, StreamSampler, write_subgraph

DEFAULTS = {"hops": 4, "prune_cycle": 100_000, "prune_size": 3_000, "max_size": 500}


def _node_list(text: str) -> list[int]:
    try:
        nodes = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad node list {text!r}") from None
    if not nodes:
        raise argparse.ArgumentTypeError("empty node list")
    return nodes


def _add_algorithm_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--hops", type=int, default=DEFAULTS["hops"], help="k: sampling radius and diffusion steps")
    p.add_argument("--prune-cycle", type=int, default=DEFAULTS["prune_cycle"], help="prune every N stream edges")
    p.add_argument("--prune-size", type=int, default=DEFAULTS["prune_size"], help="nodes kept at each prune")
    p.add_argument("--max-size", type=int, default=DEFAULTS["max_size"], help="largest candidate prefix swept")
    p.add_argument("--mode", choices=("approx", "local", "truth-size"), default="approx")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="streamcomm", description="Local community detection over edge streams")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shuffle", help="write a seeded random permutation of an edge list")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("detect", help="detect the community of one query set")
    p.add_argument("--stream", required=True, help="edge-list file, read once in file order")
    p.add_argument("--query", required=True, type=_node_list, help="comma-separated query node ids")
    _add_algorithm_flags(p)
    p.add_argument("--truth-size", type=int, help="community size for --mode truth-size")
    p.add_argument("--dump-subgraph", metavar="PATH", help="also write the sampled subgraph and degrees")

    p = sub.add_parser("eval", help="batch evaluation against ground-truth communities")
    p.add_argument("--stream", required=True)
    p.add_argument("--communities", required=True)
    p.add_argument("--cases", type=int, default=500)
    p.add_argument("--queries-per-case", type=int, default=3)
    p.add_argument("--min-size", type=int, default=20, help="drop ground-truth communities smaller than this")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--no-shuffle", action="store_true", help="use the stream in file order")
    p.add_argument("--parallel", type=int, default=1, help="extraction worker threads")
    p.add_argument("--no-times", action="store_true", help="omit timings so reruns are byte-identical")
    _add_algorithm_flags(p)
    p.add_argument("--out", help="JSON-lines output path (default stdout)")
    return parser


def _config_echo(args) -> dict:
    return {
        "hops": args.hops,
        "prune_cycle": args.prune_cycle,
        "prune_size": args.prune_size,
        "max_size": args.max_size,
        "mode": args.mode,
    }


def cmd_shuffle(args) -> int:
    n = streamio.shuffle_stream(args.input, args.seed, args.output)
    print(n)
    return 0


def cmd_detect(args, parser) -> int:
    if args.mode == "truth-size" and args.truth_size is None:
        parser.error("--mode truth-size requires --truth-size")
    if args.mode != "truth-size" and args.truth_size is not None:
        parser.error("--truth-size only applies to --mode truth-size")
    queries = sorted(set(args.query))
    scfg = SamplerConfig(args.hops, args.prune_cycle, args.prune_size)
    ecfg = ExtractionConfig(args.hops, args.max_size, args.mode, args.truth_size)
    try:
        scfg.validate(len(queries))
        ecfg.validate(len(queries))
    except ValueError as exc:
        parser.error(str(exc))

    t0 = time.perf_counter()
    sampler = StreamSampler(queries, scfg)
    sampler.feed(streamio.EdgeReader(args.stream))
    t1 = time.perf_counter()
    res = extract(sampler.subgraph, sampler.degrees, queries, ecfg)
    t2 = time.perf_counter()

    if args.dump_subgraph:
        write_subgraph(args.dump_subgraph, sampler.subgraph, sampler.degrees)
    out = {
        "community": res.sorted_community(),
        "size": len(res.community),
        "score": res.score,
        "index": res.index,
        "mode": args.mode,
        "queries": queries,
        "times": {"sample": t1 - t0, "extract": t2 - t1},
        "config": {**_config_echo(args), "truth_size": args.truth_size},
    }
    unseen = [q for q in queries if sampler.degrees.get(q, 0) == 0]
    if unseen:
        out["warning"] = f"query nodes never observed in the stream: {unseen}"
    print(json.dumps(out))
    return 0


def cmd_eval(args) -> int:
    scfg = SamplerConfig(args.hops, args.prune_cycle, args.prune_size, args.seed)
    ecfg = ExtractionConfig(args.hops, args.max_size, args.mode)
    results = evaluation.run_experiment(
        args.stream,
        args.communities,
        n_cases=args.cases,
        queries_per_case=args.queries_per_case,
        seed=args.seed,
        repetitions=args.repetitions,
        sampler_config=scfg,
        extraction_config=ecfg,
        shuffle=not args.no_shuffle,
        min_size=args.min_size,
        parallel=args.parallel,
    )
    config = {
        **_config_echo(args),
        "cases": args.cases,
        "queries_per_case": args.queries_per_case,
        "min_size": args.min_size,
        "shuffle": not args.no_shuffle,
    }
    fh = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for records, summary in results:
            evaluation.write_records(fh, records, summary, config, with_times=not args.no_times)
    finally:
        if args.out:
            fh.close()
    for records, summary in results:
        if summary["n"]:
            print(
                f"repetition {summary['repetition']}: F1 = {summary['mean_f1']:.4f} "
                f"± {summary['stderr_f1']:.4f} over {summary['n']} cases",
                file=sys.stderr,
            )
        else:
            print(f"repetition {summary['repetition']}: no test cases", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "shuffle":
            return cmd_shuffle(args)
        if args.command == "detect":
            return cmd_detect(args, parser)
        return cmd_eval(args)
    except (OSError, streamio.ParseError, SamplingFailure, ValueError) as exc:
        print(f"streamcomm: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
