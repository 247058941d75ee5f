"""Command-line surface: graph generation, basis construction, transforms,
basis-comparison studies and n-term approximation studies.

Primary outputs are CSV/JSON; passing ``--plot`` on the report-producing
commands additionally renders a matplotlib figure next to the data files.
All randomness is seed-controlled (``--seed`` or the ``L1GFT_SEED`` env var;
numpy PCG64 generator), and reports echo every parameter so figures are
reproducible from the report alone.
"""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import exact, fileio, greedy, spectral, transform, variation
from .errors import InvalidParameter, L1GFTError, LengthMismatch
from .graph import load_graph, random_geometric_graph, save_graph


def _resolve_seed(args):
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("L1GFT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InvalidParameter(f"bad L1GFT_SEED value {env!r}") from exc
    return 0


def _load_graph(args):
    return load_graph(args.graph, fmt=args.graph_format)


def _write_json(obj, path):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_gen(args):
    seed = _resolve_seed(args)
    g = random_geometric_graph(args.n, args.sigma, seed)
    save_graph(g, args.out)
    return 0


def cmd_basis(args):
    g = _load_graph(args)
    started = time.perf_counter()
    report = {"params": {"kind": args.kind, "graph": args.graph, "n": g.n}}
    if args.kind == "greedy":
        tree = greedy.build_merge_tree(g)
        basis = greedy.greedy_basis_from_tree(tree)
        columns = basis.columns
        if args.tree:
            with open(args.tree, "w") as fh:
                fh.write(greedy.tree_to_json(tree) + "\n")
    elif args.kind == "laplacian":
        basis = spectral.laplacian_basis(g)
        columns = basis.columns
        if args.eigenvalues:
            fileio.write_vector(basis.eigenvalues, args.eigenvalues)
    else:  # l1
        basis = exact.exact_l1_basis(g, max_n=args.max_n)
        columns = basis.columns
        report["params"]["max_n"] = args.max_n
        report["steps"] = [
            {
                "k": step.k,
                "candidates": step.candidates,
                "winner_partition": [
                    [i + 1 for i in blk] for blk in step.winner_blocks
                ],
                "variation": step.variation,
            }
            for step in basis.steps
        ]
        report["variations"] = list(basis.variations)
    fileio.write_matrix(columns, args.out)
    if args.report:
        report["timing"] = {"seconds": time.perf_counter() - started}
        _write_json(report, args.report)
    return 0


def cmd_transform(args):
    x = variation.read_signal(args.signal)
    if args.kind == "naive":
        basis = fileio.read_matrix(args.basis)
        coeffs = transform.naive_transform(basis, x, basis_tag="custom")
    else:
        with open(args.tree) as fh:
            tree = greedy.tree_from_json(fh.read())
        coeffs = transform.fast_greedy_transform(tree, x)
    fileio.write_vector(coeffs.values, args.out)
    return 0


def _basis_for(g, kind):
    if kind == "greedy":
        return greedy.greedy_basis_from_tree(greedy.build_merge_tree(g)).columns
    return spectral.laplacian_basis(g).columns


def cmd_nterm(args):
    g = _load_graph(args)
    if args.signal is not None:
        x = variation.read_signal(args.signal, n=g.n)
    elif args.simulate:
        spectrum = spectral.laplacian_basis(g)
        x = transform.simulated_signal(spectrum, args.mu, _resolve_seed(args))
    else:
        raise InvalidParameter("need --signal or --simulate")
    columns = _basis_for(g, args.basis)
    curve = transform.n_term_curve(columns, x, basis_tag=args.basis)
    fileio.write_curve(curve, args.out)
    if args.plot:
        from .plotting import plot_curves

        plot_curves({args.basis: curve.errors}, args.plot)
    return 0


def _compare_trial(task):
    n, sigma, seed, trial = task
    g = random_geometric_graph(n, sigma, [seed, trial])
    exact_basis = exact.exact_l1_basis(g)
    greedy_cols = _basis_for(g, "greedy")
    lap_cols = _basis_for(g, "laplacian")

    s_exact_u2 = exact_basis.variations[1]
    s_greedy_u2 = variation.l1_variation(g, greedy_cols[:, 1])
    s_lap_u2 = variation.l1_variation(g, lap_cols[:, 1])
    s_exact = variation.basis_variation_sum(g, exact_basis.columns)
    s_greedy = variation.basis_variation_sum(g, greedy_cols)
    s_lap = variation.basis_variation_sum(g, lap_cols)
    return {
        "trial": trial,
        "seed": [seed, trial],
        "n": n,
        "sigma": sigma,
        "S_exact_u2": s_exact_u2,
        "S_greedy_u2": s_greedy_u2,
        "S_laplacian_u2": s_lap_u2,
        "S_exact_basis": s_exact,
        "S_greedy_basis": s_greedy,
        "S_laplacian_basis": s_lap,
        "r_greedy_u2": (s_greedy_u2 - s_exact_u2) / s_exact_u2,
        "r_laplacian_u2": (s_lap_u2 - s_exact_u2) / s_exact_u2,
        "r_greedy_basis": (s_greedy - s_exact) / s_exact,
        "r_laplacian_basis": (s_lap - s_exact) / s_exact,
    }


def run_comparison(n, trials, sigma, seed, jobs=1):
    """Comparison study: exact l1 vs greedy vs Laplacian bases over random
    geometric graphs.  Trial order is fixed, so the report does not depend
    on the worker count."""
    if not 3 <= n <= 8:
        raise InvalidParameter("compare needs 3 <= n <= 8 (exact oracle range)")
    if trials < 1:
        raise InvalidParameter("need trials >= 1")
    tasks = [(n, sigma, seed, t) for t in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_compare_trial, tasks))
    else:
        records = [_compare_trial(task) for task in tasks]
    keys = ["r_greedy_u2", "r_laplacian_u2", "r_greedy_basis",
            "r_laplacian_basis"]
    aggregate = {
        f"mean_{key}": float(np.mean([r[key] for r in records]))
        for key in keys
    }
    return {
        "params": {"n": n, "trials": trials, "sigma": sigma, "seed": seed},
        "trials": records,
        "aggregate": aggregate,
    }


def cmd_compare(args):
    seed = _resolve_seed(args)
    started = time.perf_counter()
    report = run_comparison(args.n, args.trials, args.sigma, seed,
                            jobs=args.jobs)
    report["timing"] = {"seconds": time.perf_counter() - started}
    _write_json(report, args.out)
    if args.plot:
        from .plotting import plot_comparison

        plot_comparison(report, args.plot)
    return 0


def ingest_signal(path, g):
    """Validated real-valued signal for graph ``g`` from a CSV file."""
    x = variation.read_signal(path)
    if x.shape[0] != g.n:
        raise LengthMismatch(
            f"{path}: signal has {x.shape[0]} values, graph has {g.n} vertices"
        )
    return x


def cmd_ingest(args):
    g = _load_graph(args)
    x = ingest_signal(args.signal, g)
    if args.out:
        variation.write_signal(x, args.out)
    return 0


def _add_graph_arg(p):
    p.add_argument("--graph", required=True, help="graph CSV file")
    p.add_argument("--graph-format", choices=["dense", "edge-list"],
                   default="dense", help="graph file format (default dense)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="l1gft",
        description="Graph Fourier bases by l1 variation minimization",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random geometric graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("basis", help="construct an orthonormal basis")
    p.add_argument("kind", choices=["greedy", "laplacian", "l1"])
    _add_graph_arg(p)
    p.add_argument("--out", required=True, help="basis CSV output")
    p.add_argument("--tree", help="merge-tree JSON output (greedy only)")
    p.add_argument("--eigenvalues", help="eigenvalue CSV output (laplacian only)")
    p.add_argument("--report", help="JSON report output")
    p.add_argument("--max-n", type=int, default=exact.DEFAULT_MAX_N,
                   help="enumeration cap for the l1 oracle (default 10)")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("transform", help="forward transform of a signal")
    p.add_argument("kind", choices=["naive", "fast"])
    p.add_argument("--basis", help="basis CSV (naive)")
    p.add_argument("--tree", help="merge-tree JSON (fast)")
    p.add_argument("--signal", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("nterm", help="n-term approximation error curve")
    _add_graph_arg(p)
    p.add_argument("--basis", choices=["greedy", "laplacian"], required=True)
    p.add_argument("--signal")
    p.add_argument("--simulate", action="store_true",
                   help="use a simulated smooth signal instead of --signal")
    p.add_argument("--mu", type=float, default=5.0,
                   help="spectral decay parameter for --simulate (default 5)")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True, help="curve CSV output")
    p.add_argument("--plot", help="optional figure output (png)")
    p.set_defaults(func=cmd_nterm)

    p = sub.add_parser("compare", help="basis comparison study")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--sigma", type=float, default=0.5)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True, help="JSON report output")
    p.add_argument("--plot", help="optional figure output (png)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("ingest", help="validate a signal against a graph")
    _add_graph_arg(p)
    p.add_argument("--signal", required=True)
    p.add_argument("--out", help="echo the validated signal to this CSV")
    p.set_defaults(func=cmd_ingest)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "transform":
            if args.kind == "naive" and not args.basis:
                raise InvalidParameter("transform naive needs --basis")
            if args.kind == "fast" and not args.tree:
                raise InvalidParameter("transform fast needs --tree")
        return args.func(args)
    except L1GFTError as exc:
        print(f"error code={exc.code} message={exc.message!r}",
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
