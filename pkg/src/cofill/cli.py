"""Command-line front end.

Subcommands: complete, verify, recognize, gen, bench.  Exit codes: 0 ok,
1 domain failure (parse error, missing file, failed verification), 2 usage
or guard refusal.  All outputs except wall-clock stats are byte-identical
across runs for a fixed seed and order.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import forest, oracle
from .errors import CofillError, FillGuardExceeded
from .graphs import generate_gnm, generate_random_regular, parse_edge_list, \
    serialize_edge_list
from .linear import complete_graph
from .polylog import complete_graph_fast

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _read_graph(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def _open_sink(spec):
    if spec == "-":
        return sys.stdout, False
    return open(spec, "w", encoding="utf-8"), True


def _write_sink(spec, text):
    sink, close = _open_sink(spec)
    try:
        sink.write(text)
    finally:
        if close:
            sink.close()


def _run_completion(graph, algo, order_mode, seed, backend=None,
                    collect_fill=True):
    order = list(range(graph.n))
    if order_mode == "shuffle":
        random.Random(seed).shuffle(order)
    start = time.perf_counter()
    if algo == "linear":
        result = complete_graph(graph, order)
    else:
        result = complete_graph_fast(graph, order, backend=backend,
                                     collect_fill=collect_fill)
    elapsed = time.perf_counter() - start
    return result, elapsed


def cmd_complete(args):
    graph = _read_graph(args.input)
    collect_fill = args.emit_fill_edges is not None or args.algo == "linear"
    result, elapsed = _run_completion(
        graph, args.algo, args.order, args.seed, backend=args.backend,
        collect_fill=collect_fill)
    if args.emit_fill_edges is not None:
        text = "".join(f"{u} {v}\n" for u, v in result.fill_edges)
        _write_sink(args.emit_fill_edges, text)
    if args.output_cotree is not None:
        _write_sink(args.output_cotree, result.cotree.serialize() + "\n")
    if args.stats is not None:
        lines = [
            f"n={graph.n}",
            f"m={graph.m}",
            f"m_prime={result.m_prime}",
            f"fill_count={result.fill_count}",
        ]
        if result.per_step_costs is not None:
            lines.append("per_step_costs="
                         + ",".join(map(str, result.per_step_costs)))
            lines.append("nodes_touched="
                         + str(sum(s.nodes_touched for s in result.step_metrics)))
        else:
            lines.append("lca_queries="
                         + str(sum(s.lca_queries for s in result.step_metrics)))
        lines.append(f"wall_time_s={elapsed:.6f}")
        _write_sink(args.stats, "".join(line + "\n" for line in lines))
    if (args.emit_fill_edges is None and args.output_cotree is None
            and args.stats is None):
        print(f"fill_count={result.fill_count}")
    return EXIT_OK


def cmd_verify(args):
    graph = _read_graph(args.input)
    with open(args.fill, "r", encoding="utf-8") as handle:
        fill = []
        for lineno, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = stripped.split()
            if len(tokens) != 2:
                print(f"fill file line {lineno}: expected two tokens",
                      file=sys.stderr)
                return EXIT_FAILURE
            fill.append((int(tokens[0]), int(tokens[1])))
    try:
        ok = oracle.is_minimal_completion(graph, fill)
    except FillGuardExceeded as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if ok:
        print("minimal completion: yes")
        return EXIT_OK
    print("minimal completion: no")
    return EXIT_FAILURE


def cmd_recognize(args):
    graph = _read_graph(args.input)
    result = complete_graph(graph)
    if args.output_cotree is not None and result.fill_count == 0:
        _write_sink(args.output_cotree, result.cotree.serialize() + "\n")
    if result.fill_count == 0:
        print("cograph: yes")
        return EXIT_OK
    print("cograph: no")
    return EXIT_FAILURE


def cmd_gen(args):
    if args.family == "regular3":
        graph = generate_random_regular(args.n, 3, seed=args.seed)
    else:
        m = args.m if args.m is not None else args.n
        graph = generate_gnm(args.n, m, seed=args.seed)
    _write_sink(args.output, serialize_edge_list(graph))
    return EXIT_OK


def _bench_one(task):
    family, n, seed, algo, backend = task
    if family == "regular3":
        graph = generate_random_regular(n, 3, seed=seed)
    else:
        graph = generate_gnm(n, n, seed=seed)
    result, elapsed = _run_completion(graph, algo, "input", seed,
                                      backend=backend, collect_fill=False)
    return n, result.fill_count, elapsed


def cmd_bench(args):
    sizes = args.sizes
    tasks = [(args.family, n, seed, args.algo, args.backend)
             for n in sizes for seed in range(args.seeds)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_one, tasks))
    else:
        rows = [_bench_one(t) for t in tasks]
    print(f"{'n':>8} {'mean_fill':>14} {'fill_per_n2':>12} {'mean_time_s':>12}")
    for n in sizes:
        fills = [fill for rn, fill, _ in rows if rn == n]
        times = [t for rn, _, t in rows if rn == n]
        mean_fill = sum(fills) / len(fills)
        mean_time = sum(times) / len(times)
        print(f"{n:>8} {mean_fill:>14.1f} {mean_fill / n / n:>12.5f} "
              f"{mean_time:>12.5f}")
    return EXIT_OK


def _csv_ints(text):
    if not text.strip():
        raise argparse.ArgumentTypeError("empty size list")
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cofill",
        description="Inclusion-minimal cograph completion.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complete", help="complete a graph into a cograph")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--algo", choices=("linear", "polylog"), default="linear")
    p.add_argument("--order", choices=("input", "shuffle"), default="input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=forest.available_backends(),
                   default=None, help="forest kernel (polylog only)")
    p.add_argument("--emit-fill-edges", metavar="PATH",
                   help="write fill edges ('-' for stdout)")
    p.add_argument("--output-cotree", metavar="PATH",
                   help="write the final cotree ('-' for stdout)")
    p.add_argument("--stats", metavar="PATH",
                   help="write key=value stats ('-' for stdout)")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("verify",
                       help="check a fill set is a minimal completion")
    p.add_argument("input", help="edge-list file")
    p.add_argument("fill", help="fill-edge file ('u v' lines)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recognize", help="test whether a graph is a cograph")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--output-cotree", metavar="PATH")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("gen", help="generate a benchmark graph")
    p.add_argument("--family", choices=("regular3", "gnm"),
                   default="regular3")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None,
                   help="edge count for gnm (default n)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="fill-density benchmark")
    p.add_argument("--family", choices=("regular3", "gnm"),
                   default="regular3")
    p.add_argument("--sizes", type=_csv_ints, required=True,
                   help="comma-separated vertex counts")
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--algo", choices=("linear", "polylog"), default="linear")
    p.add_argument("--backend", choices=forest.available_backends(),
                   default=None)
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel workers, one per (size, seed) pair")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CofillError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
