"""Command-line interface: ``cutscan <command> ...``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 brute-force cap refusal.
``CUTSCAN_BRUTE_CAP`` overrides the default brute-force vertex cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import IO, Sequence

from .bench import efficiency_table, seed_sensitivity, sweep_degree, sweep_size, write_rows, write_table
from .enumeration import DEFAULT_BRUTE_CAP, CapExceededError, EnumerationReport, count_skipped, count_skipped_brute
from .generator import GenerationError, GenSpec, generated_document, random_monolithic
from .graph import Cutset, Graph, GraphError, decompose_segments, load_graph, read_graph
from .runner import ALGORITHMS, enumerate_by_segments, iter_cutsets, min_degree_seed

EXIT_USAGE, EXIT_DATA, EXIT_CAP = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_cap() -> int:
    raw = os.environ.get("CUTSCAN_BRUTE_CAP")
    if raw is None:
        return DEFAULT_BRUTE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"CUTSCAN_BRUTE_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError("CUTSCAN_BRUTE_CAP must be positive")
    return cap


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _gen_spec(text: str) -> GenSpec:
    try:
        n, d, seed = text.split(":")
        return GenSpec(int(n), float(d), int(seed))
    except ValueError:
        raise argparse.ArgumentTypeError("expected N:AVG_DEGREE:RNG_SEED") from None


# ---------------------------------------------------------------------------
# formatting

def format_cutset(c: Cutset) -> str:
    return " ".join(map(str, c.side_s)) + " | " + " ".join(f"{u}-{v}" for u, v in c.crossing_edges)


def cutset_json(c: Cutset) -> str:
    return json.dumps({"side_s": list(c.side_s), "side_t": list(c.side_t),
                       "crossing_edges": [list(e) for e in c.crossing_edges]})


def cutset_csv(c: Cutset) -> str:
    return ",".join([" ".join(map(str, c.side_s)), " ".join(map(str, c.side_t)),
                     " ".join(f"{u}-{v}" for u, v in c.crossing_edges)])


def _summary_line(summary: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in summary.items())


def _emit(cutsets, fmt: str, out: IO[str]) -> int:
    count = 0
    if fmt == "csv":
        out.write("side_s,side_t,crossing_edges\n")
    for c in cutsets:
        line = {"plain": format_cutset, "json": cutset_json, "csv": cutset_csv}[fmt](c)
        out.write(line + "\n")
        count += 1
    return count


def _finish(summary: dict, fmt: str, out: IO[str], err: IO[str]) -> None:
    if fmt == "json":
        out.write(json.dumps({"summary": summary}) + "\n")
    elif fmt == "csv":
        err.write(_summary_line(summary) + "\n")
    else:
        out.write(_summary_line(summary) + "\n")


# ---------------------------------------------------------------------------
# commands

def _load(args) -> Graph:
    if args.generate is not None:
        return random_monolithic(args.generate)
    if args.input == "-":
        return load_graph(sys.stdin.read())
    return read_graph(args.input)


def _seed(args, g: Graph) -> int:
    if args.seed_vertex is None:
        return min_degree_seed(g)
    if not 0 <= args.seed_vertex < g.n:
        raise GraphError(f"seed vertex {args.seed_vertex} outside [0, {g.n})")
    return args.seed_vertex


def cmd_enumerate(args, out, err) -> int:
    g = _load(args)
    report = EnumerationReport(args.algorithm, _seed(args, g))
    # streamed: report.cutsets stays empty, so count what was written
    count = _emit(iter_cutsets(g, args.algorithm, report, args.brute_cap), args.format, out)
    summary = report.summary()
    del summary["cutsets"]
    _finish({"cutsets": count, **summary}, args.format, out, err)
    return 0


def cmd_segments(args, out, err) -> int:
    g = _load(args)
    seed = _seed(args, g)
    if not args.enumerate:
        segments = decompose_segments(g)
        _print_segments(segments, args.format, out)
        _finish({"segments": len(segments)}, args.format, out, err)
        return 0
    segments, cutsets, reports = enumerate_by_segments(g, args.algorithm, seed, args.brute_cap)
    _print_segments(segments, args.format, out)
    _emit(cutsets, args.format, out)
    _finish({"segments": len(segments), "cutsets": len(cutsets),
             "iterations": sum(r.iterations for r in reports),
             "duplicates_detected": sum(r.duplicates_detected for r in reports)},
            args.format, out, err)
    return 0


def _print_segments(segments, fmt: str, out: IO[str]) -> None:
    for i, s in enumerate(segments):
        if fmt == "json":
            out.write(json.dumps({"segment": i, "vertices": sorted(s.vertices),
                                  "edges": [list(e) for e in s.edges]}) + "\n")
        elif fmt == "plain":
            out.write(f"segment {i}: vertices {' '.join(map(str, sorted(s.vertices)))}"
                      f" edges {' '.join(f'{u}-{v}' for u, v in s.edges)}\n")


def cmd_count_skipped(args, out, err) -> int:
    g = _load(args)
    seed = _seed(args, g)
    est = count_skipped(g, seed, args.mode)
    result = {"seed": seed, "mode": est.mode, "estimate": est.total}
    if g.n <= args.brute_cap:
        result["brute"] = count_skipped_brute(g, seed, args.brute_cap)
    if args.format == "json":
        out.write(json.dumps(result) + "\n")
    else:
        out.write(_summary_line(result) + "\n")
    return 0


def cmd_randgen(args, out, err) -> int:
    spec = GenSpec(args.n, args.avg_degree, args.rng_seed, not args.allow_interior, args.max_retries)
    doc = generated_document(spec)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(doc)
    else:
        out.write(doc)
    return 0


def _write_bench(rows, args, out) -> None:
    target = open(args.output, "w", encoding="utf-8", newline="\n") if args.output else out
    try:
        write_rows(rows, target, timing=not args.no_timing)
    finally:
        if args.output:
            target.close()
    if args.table:
        with open(args.table, "w", encoding="utf-8", newline="\n") as fh:
            write_table(efficiency_table(rows), fh)


def cmd_bench(args, out, err) -> int:
    algorithms = tuple(args.algorithms)
    if args.sweep == "degree":
        if args.n is None or not args.degrees:
            raise UsageError("--sweep degree needs --n and --degrees")
        rows = sweep_degree(args.n, args.degrees, args.trials, args.rng_seed, algorithms, args.jobs)
    else:
        if not args.sizes or args.avg_degree is None:
            raise UsageError("--sweep size needs --sizes and --avg-degree")
        rows = sweep_size(args.sizes, args.avg_degree, args.trials, args.rng_seed, algorithms, args.jobs)
    _write_bench(rows, args, out)
    return 0


def cmd_seed_sensitivity(args, out, err) -> int:
    g = _load(args)
    include_brute = not args.no_brute and g.n <= args.brute_cap
    rows = seed_sensitivity(g, include_brute, args.brute_cap)
    _write_bench(rows, args, out)
    return 0


# ---------------------------------------------------------------------------

def build_parser(cap: int) -> argparse.ArgumentParser:
    p = _Parser(prog="cutscan", description="Enumerate all minimal cutsets of an undirected graph.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_source(sp):
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", "-i", help="edge-list file ('-' for stdin)")
        src.add_argument("--generate", type=_gen_spec, metavar="N:D:SEED",
                         help="use a random monolithic graph instead of a file")
        sp.add_argument("--seed-vertex", type=int, help="enumeration seed (default: a min-degree vertex)")
        sp.add_argument("--brute-cap", type=_positive, default=cap)

    sp = sub.add_parser("enumerate", help="list all minimal cutsets")
    graph_source(sp)
    sp.add_argument("--algorithm", "-a", choices=ALGORITHMS, default="enhanced")
    sp.add_argument("--format", "-f", choices=("plain", "json", "csv"), default="plain")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("segments", help="split into elementary segments")
    graph_source(sp)
    sp.add_argument("--enumerate", action="store_true", help="enumerate per segment and print the union")
    sp.add_argument("--algorithm", "-a", choices=ALGORITHMS, default="enhanced")
    sp.add_argument("--format", "-f", choices=("plain", "json", "csv"), default="plain")
    sp.set_defaults(func=cmd_segments)

    sp = sub.add_parser("count-skipped", help="estimate the number of disconnected seed subsets")
    graph_source(sp)
    sp.add_argument("--mode", choices=("literal", "current"), default="current")
    sp.add_argument("--format", "-f", choices=("plain", "json"), default="plain")
    sp.set_defaults(func=cmd_count_skipped)

    sp = sub.add_parser("randgen", help="write a random monolithic graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--avg-degree", type=float, required=True)
    sp.add_argument("--rng-seed", type=int, required=True)
    sp.add_argument("--allow-interior", action="store_true", help="only require connectivity")
    sp.add_argument("--max-retries", type=_positive, default=200_000)
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_randgen)

    def bench_output(sp):
        sp.add_argument("--output", "-o", help="CSV destination (default stdout)")
        sp.add_argument("--table", help="also write the efficiency table here")
        sp.add_argument("--no-timing", action="store_true", help="leave wall_time_ms empty")

    sp = sub.add_parser("bench", help="iteration sweeps over random monolithic graphs")
    sp.add_argument("--sweep", choices=("degree", "size"), required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--degrees", type=float, nargs="+")
    sp.add_argument("--sizes", type=int, nargs="+")
    sp.add_argument("--avg-degree", type=float)
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--rng-seed", type=int, default=0)
    sp.add_argument("--algorithms", nargs="+", choices=ALGORITHMS, default=["recursive", "enhanced"])
    sp.add_argument("--jobs", type=_positive, default=1)
    bench_output(sp)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("seed-sensitivity", help="iterations for every seed vertex")
    graph_source(sp)
    sp.add_argument("--no-brute", action="store_true")
    bench_output(sp)
    sp.set_defaults(func=cmd_seed_sensitivity)
    return p


def run(argv: Sequence[str] | None = None, out: IO[str] | None = None, err: IO[str] | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        parser = build_parser(_default_cap())
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"cutscan: error: {exc}\n")
        return EXIT_USAGE
    except CapExceededError as exc:
        err.write(f"cutscan: {exc}; raise --brute-cap or CUTSCAN_BRUTE_CAP\n")
        return EXIT_CAP
    except (GraphError, GenerationError, ValueError, OSError) as exc:
        err.write(f"cutscan: {exc}\n")
        return EXIT_DATA


def main() -> None:
    sys.exit(run())
