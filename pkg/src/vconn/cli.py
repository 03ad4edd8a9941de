"""Command-line front end and the empirical-scaling benchmark harness.

Exit codes: 0 success, 1 domain errors (message names the error class on
stderr), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import testkit
from .articulation import strong_articulation_points
from .connectivity import strongly_connected_components
from .dominators import dominator_tree
from .errors import GraphError, MismatchedOutputs
from .graph import DiGraph, format_edge_list, induced_subgraph, read_edge_list
from .kvcc import k_vccs, min_vertex_cut
from .sparsify import sparsify_problem1, sparsify_problem2, sparsify_problem3
from .twovcc import VARIANTS, two_vccs


@dataclass(frozen=True)
class BenchRecord:
    algo: str
    n: int
    m: int
    nanos: int
    components: int
    seed: int

    def csv_row(self) -> str:
        return f"{self.algo},{self.n},{self.m},{self.nanos},{self.components},{self.seed}"


def _load_graph(path: str) -> DiGraph:
    if path == "-":
        return read_edge_list(sys.stdin.read())
    with open(path, "r", encoding="ascii") as handle:
        return read_edge_list(handle.read())


def _print_components(comps, as_json: bool) -> None:
    if as_json:
        print(json.dumps([list(c) for c in comps]))
    else:
        for c in comps:
            print(" ".join(str(v) for v in c))


def _cmd_scc(args) -> int:
    g = _load_graph(args.graph)
    _print_components(strongly_connected_components(g).components, args.json)
    return 0


def _cmd_domtree(args) -> int:
    g = _load_graph(args.graph)
    tree = dominator_tree(g, args.root)
    if args.json:
        rows = [[w, tree.idom.get(w)] for w in range(g.n)]
        print(json.dumps({"root": tree.root, "idom": rows}))
    else:
        for w in range(g.n):
            print(f"{w} -" if w == tree.root else f"{w} {tree.idom[w]}")
    return 0


def _cmd_sap(args) -> int:
    g = _load_graph(args.graph)
    points: set[int] = set()
    for comp in strongly_connected_components(g).components:
        if len(comp) >= 2:
            points.update(
                comp[i] for i in strong_articulation_points(induced_subgraph(g, comp))
            )
    if args.json:
        print(json.dumps(sorted(points)))
    else:
        for v in sorted(points):
            print(v)
    return 0


def _cmd_2vcc(args) -> int:
    g = _load_graph(args.graph)
    _print_components(two_vccs(g, args.algo), args.json)
    return 0


def _cmd_kvcc(args) -> int:
    g = _load_graph(args.graph)
    _print_components(k_vccs(g, args.k), args.json)
    return 0


def _cmd_cut(args) -> int:
    g = _load_graph(args.graph)
    cut = min_vertex_cut(g)
    if args.json:
        print(json.dumps(list(cut.vertices)))
    else:
        print(" ".join(str(v) for v in cut.vertices))
    return 0


def _cmd_sparsify(args) -> int:
    g = _load_graph(args.graph)
    solver = {1: sparsify_problem1, 2: sparsify_problem2, 3: sparsify_problem3}[args.problem]
    result = solver(g)
    if args.json:
        print(
            json.dumps(
                {
                    "n": g.n,
                    "edges": [list(e) for e in result.edges],
                    "retained": result.size,
                    "of": g.m,
                    "certificate_ok": result.certificate_ok,
                }
            )
        )
    else:
        print(format_edge_list(DiGraph(g.n, result.edges)), end="")
        print(f"# retained {result.size} of {g.m} edges")
    return 0


def _cmd_gen(args) -> int:
    sizes = None
    if args.sizes:
        sizes = tuple(int(tok) for tok in args.sizes.split(","))
    spec = testkit.GenSpec(
        n=args.n,
        m=args.m,
        model=args.model,
        seed=args.seed,
        sizes=sizes,
        strongly_connected=args.strong,
    )
    print(format_edge_list(testkit.gen_random(spec)), end="")
    return 0


def bench(
    sizes: list[int],
    algos: list[str],
    repetitions: int,
    seed: int = 0,
    density: float = 4.0,
    clique: int = 4,
) -> list[BenchRecord]:
    """Time each algorithm on identical planted graphs.

    The family is a chain of bidirected cliques tiling all n vertices
    (strongly connected by construction, one component per clique), topped
    up with noise edges to the density target.  Component lists are
    compared before any timing row is emitted; a disagreement is an
    implementation bug and aborts the run.
    """
    records: list[BenchRecord] = []
    for idx, n in enumerate(sizes):
        m = int(density * n)
        for rep in range(repetitions):
            point_seed = seed + 1_000_003 * idx + rep
            count = max(1, (n - 1) // (clique - 1))
            spec = testkit.GenSpec(
                n=n,
                m=m,
                model="planted",
                seed=point_seed,
                sizes=(clique,) * count,
            )
            g = testkit.gen_random(spec)
            outputs = {}
            timings = {}
            for algo in algos:
                start = time.perf_counter_ns()
                comps = two_vccs(g, algo)
                timings[algo] = time.perf_counter_ns() - start
                outputs[algo] = comps
            reference = outputs[algos[0]]
            for algo in algos[1:]:
                if outputs[algo] != reference:
                    raise MismatchedOutputs(
                        f"{algo} disagrees with {algos[0]} on n={n} seed={point_seed}"
                    )
            for algo in algos:
                records.append(
                    BenchRecord(algo, g.n, g.m, timings[algo], len(reference), point_seed)
                )
    return records


def _cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",")]
    algos = [tok.strip() for tok in args.algos.split(",")]
    bad = [a for a in algos if a not in VARIANTS]
    if bad or not algos:
        print(f"usage error: unknown algorithm(s) {bad}", file=sys.stderr)
        return 2
    records = bench(sizes, algos, args.reps, args.seed, args.density, args.clique)
    print("algo,n,m,nanos,components,seed")
    for record in records:
        print(record.csv_row())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vconn",
        description="Directed-graph vertex-connectivity toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_cmd(name: str, func, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", nargs="?", default="-", help="edge-list file ('-' = stdin)")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.set_defaults(func=func)
        return p

    add_graph_cmd("scc", _cmd_scc, "strongly connected components")
    p = add_graph_cmd("domtree", _cmd_domtree, "dominator tree (one 'w idom' line per vertex)")
    p.add_argument("--root", type=int, default=0, help="start vertex (default 0)")
    add_graph_cmd("sap", _cmd_sap, "strong articulation points, one id per line")
    p = add_graph_cmd("2vcc", _cmd_2vcc, "2-vertex-connected components")
    p.add_argument("--algo", choices=VARIANTS, default="split")
    p = add_graph_cmd("kvcc", _cmd_kvcc, "k-vertex-connected components")
    p.add_argument("-k", type=int, required=True)
    add_graph_cmd("cut", _cmd_cut, "a minimum vertex cut")
    p = add_graph_cmd("sparsify", _cmd_sparsify, "connectivity-preserving edge sparsifier")
    p.add_argument("--problem", type=int, choices=(1, 2, 3), default=1)

    p = sub.add_parser("gen", help="write a seeded random graph as an edge list")
    p.add_argument("--model", choices=("uniform", "planted"), default="uniform")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sizes", help="comma-separated planted clique sizes")
    p.add_argument("--strong", action="store_true", help="weave in a random spanning cycle")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time 2-vcc variants on planted graph families (CSV)")
    p.add_argument("--sizes", default="100,200,400", help="comma-separated vertex counts")
    p.add_argument("--algos", default="es,split", help="comma-separated variant names")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=4.0, help="edges per vertex")
    p.add_argument("--clique", type=int, default=6, help="planted clique size")
    p.set_defaults(func=_cmd_bench)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
