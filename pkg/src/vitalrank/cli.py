"""Command-line front end.

Subcommands: rank, efficiency, si, tau-sweep, topk-spread, experiment.
Exit codes: 0 success, 2 usage error, 3 input/parse error, 4 compute error.
Every randomized command takes an --rng-seed (default 0) that is echoed in
the output header, and output is byte-identical for any --threads value.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from pathlib import Path

from .centrality import METHODS, compute_scores
from .efficiency import efficiency_ratios
from .epidemic import SiConfig, si_simulate
from .errors import EdgeListParseError, VitalrankError
from .evaluate import DEFAULT_BETAS, tau_vs_beta_sweep, topk_spreading
from .graph import Graph, parse_edge_list

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_COMPUTE = 4


def _radius_arg(text: str):
    if text in ("auto", "none", "default"):
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"radius must be 'auto', 'none' or a number, got {text!r}"
        ) from None


def _methods_arg(text: str) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    unknown = [m for m in methods if m not in METHODS]
    if unknown or not methods:
        raise argparse.ArgumentTypeError(
            f"unknown methods {unknown}; valid: {','.join(METHODS)}"
        )
    return methods


def _betas_arg(text: str) -> list[float]:
    try:
        betas = [float(b) for b in text.split(",") if b.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad beta list {text!r}") from None
    if not betas or any(not 0.0 <= b <= 1.0 for b in betas):
        raise argparse.ArgumentTypeError("betas must lie in [0, 1]")
    return betas


def _labels_arg(text: str) -> list[str]:
    labels = [s.strip() for s in text.split(",") if s.strip()]
    if not labels:
        raise argparse.ArgumentTypeError("need at least one node label")
    return labels


def _add_common(p: argparse.ArgumentParser, output_is_dir: bool = False) -> None:
    p.add_argument("--input", "-i", required=True, help="edge-list file, '-' for stdin")
    if output_is_dir:
        p.add_argument("--output", "-o", required=True, help="output directory")
    else:
        p.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--quiet", "-q", action="store_true", help="suppress ingest summary")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vitalrank",
        description="Rank vital nodes in undirected networks and evaluate "
        "rankings against SI spreading simulations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="score and rank nodes with one method")
    _add_common(p)
    p.add_argument("--method", required=True, choices=METHODS)
    p.add_argument("--alpha", type=float, default=1.0,
                   help="clustering damping exponent (gg method)")
    p.add_argument("--radius", type=_radius_arg, default="default",
                   help="gravity truncation radius: auto, none or a number")

    p = sub.add_parser("efficiency", help="global/deleted efficiency and ratios")
    _add_common(p)

    p = sub.add_parser("si", help="SI simulation from explicit seed nodes")
    _add_common(p)
    p.add_argument("--seed-nodes", required=True, type=_labels_arg)
    p.add_argument("--beta", required=True, type=float)
    p.add_argument("--t-max", type=int, default=10)
    p.add_argument("--runs", type=int, default=100)

    p = sub.add_parser("tau-sweep",
                       help="Kendall tau of methods vs spreading ability per beta")
    _add_common(p)
    p.add_argument("--methods", type=_methods_arg, default=list(METHODS))
    p.add_argument("--betas", type=_betas_arg, default=list(DEFAULT_BETAS))
    p.add_argument("--t-max", type=int, default=10)
    p.add_argument("--runs", type=int, default=100)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--radius", type=_radius_arg, default="default")
    p.add_argument("--tau-variant", choices=("a", "b"), default="a")

    p = sub.add_parser("topk-spread",
                       help="infection curves seeding each method's top-k nodes")
    _add_common(p)
    p.add_argument("--methods", type=_methods_arg, default=list(METHODS))
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--beta", type=float, default=0.1)
    p.add_argument("--t-max", type=int, default=25)
    p.add_argument("--runs", type=int, default=100)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--radius", type=_radius_arg, default="default")

    p = sub.add_parser("experiment",
                       help="run the tau sweep and the top-k comparison together")
    _add_common(p, output_is_dir=True)
    p.add_argument("--methods", type=_methods_arg, default=list(METHODS))
    p.add_argument("--betas", type=_betas_arg, default=list(DEFAULT_BETAS))
    p.add_argument("--tau-t-max", type=int, default=10)
    p.add_argument("--topk-t-max", type=int, default=25)
    p.add_argument("--topk-beta", type=float, default=0.1)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--runs", type=int, default=100)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--radius", type=_radius_arg, default="default")
    p.add_argument("--tau-variant", choices=("a", "b"), default="a")

    return parser


def _load_graph(path: str, quiet: bool) -> Graph:
    if path == "-":
        g = parse_edge_list(sys.stdin.read())
    else:
        g = parse_edge_list(Path(path).read_text())
    if not quiet and g.report is not None:
        print(f"loaded {path}: {g.report.summary()}", file=sys.stderr)
    return g


@contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fp:
            yield fp


def _fmt(value: float) -> float | str:
    value = float(value)
    return "inf" if value == float("inf") else value


def _cmd_rank(args) -> int:
    g = _load_graph(args.input, args.quiet)
    scores = compute_scores(
        g, args.method, alpha=args.alpha, radius=args.radius, threads=args.threads
    )
    with _open_out(args.output) as fp:
        if args.format == "csv":
            scores.to_csv(fp)
        else:
            scores.to_json(fp)
    return EXIT_OK


def _cmd_efficiency(args) -> int:
    g = _load_graph(args.input, args.quiet)
    report = efficiency_ratios(g, threads=args.threads)
    with _open_out(args.output) as fp:
        if args.format == "csv":
            fp.write(f"# global_efficiency: {float(report.global_efficiency)!r}\n")
            fp.write("node_label,deleted_efficiency,ratio\n")
            for i, label in enumerate(g.labels):
                fp.write(
                    f"{label},{float(report.deleted[i])!r},"
                    f"{float(report.ratio[i])!r}\n"
                )
        else:
            json.dump(
                {
                    "global_efficiency": report.global_efficiency,
                    "nodes": [
                        {
                            "label": label,
                            "deleted_efficiency": float(report.deleted[i]),
                            "ratio": _fmt(report.ratio[i]),
                        }
                        for i, label in enumerate(g.labels)
                    ],
                },
                fp,
                indent=2,
            )
            fp.write("\n")
    return EXIT_OK


def _cmd_si(args) -> int:
    g = _load_graph(args.input, args.quiet)
    cfg = SiConfig(
        beta=args.beta, t_max=args.t_max, runs=args.runs, rng_seed=args.rng_seed
    )
    outcome = si_simulate(g, args.seed_nodes, cfg, threads=args.threads)
    with _open_out(args.output) as fp:
        if args.format == "csv":
            outcome.to_csv(fp)
        else:
            json.dump(
                {
                    "config": {
                        "beta": cfg.beta,
                        "t_max": cfg.t_max,
                        "runs": cfg.runs,
                        "rng_seed": cfg.rng_seed,
                    },
                    "seeds": list(outcome.seeds),
                    "curve": [
                        {"t": t, "N_t": float(m), "stddev": float(s)}
                        for t, (m, s) in enumerate(
                            zip(outcome.n_of_t, outcome.std_of_t)
                        )
                    ],
                },
                fp,
                indent=2,
            )
            fp.write("\n")
    return EXIT_OK


def _sweep_json(sweep) -> dict:
    return {
        "config": {"T": sweep.t_max, "K": sweep.runs, "rng_seed": sweep.rng_seed},
        "taus": [
            {"method": m, "beta": b, "tau": float(sweep.taus[mi, bi])}
            for mi, m in enumerate(sweep.methods)
            for bi, b in enumerate(sweep.betas)
        ],
    }


def _curves_json(curves) -> dict:
    return {
        "config": {
            "beta": curves.beta,
            "T": curves.t_max,
            "K": curves.runs,
            "rng_seed": curves.rng_seed,
        },
        "seed_sets": {m: list(s) for m, s in curves.seed_sets.items()},
        "curves": [
            {"method": m, "t": t, "N_t": float(curves.curves[mi, t])}
            for mi, m in enumerate(curves.methods)
            for t in range(curves.curves.shape[1])
        ],
    }


def _cmd_tau_sweep(args) -> int:
    g = _load_graph(args.input, args.quiet)
    sweep = tau_vs_beta_sweep(
        g,
        args.methods,
        betas=args.betas,
        t_max=args.t_max,
        runs=args.runs,
        rng_seed=args.rng_seed,
        alpha=args.alpha,
        radius=args.radius,
        variant=args.tau_variant,
        threads=args.threads,
    )
    with _open_out(args.output) as fp:
        if args.format == "csv":
            sweep.to_csv(fp)
        else:
            json.dump(_sweep_json(sweep), fp, indent=2)
            fp.write("\n")
    return EXIT_OK


def _cmd_topk(args) -> int:
    g = _load_graph(args.input, args.quiet)
    curves = topk_spreading(
        g,
        args.methods,
        k=args.k,
        beta=args.beta,
        t_max=args.t_max,
        runs=args.runs,
        rng_seed=args.rng_seed,
        alpha=args.alpha,
        radius=args.radius,
        threads=args.threads,
    )
    with _open_out(args.output) as fp:
        if args.format == "csv":
            curves.to_csv(fp)
        else:
            json.dump(_curves_json(curves), fp, indent=2)
            fp.write("\n")
    return EXIT_OK


def _cmd_experiment(args) -> int:
    g = _load_graph(args.input, args.quiet)
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    sweep = tau_vs_beta_sweep(
        g,
        args.methods,
        betas=args.betas,
        t_max=args.tau_t_max,
        runs=args.runs,
        rng_seed=args.rng_seed,
        alpha=args.alpha,
        radius=args.radius,
        variant=args.tau_variant,
        threads=args.threads,
    )
    curves = topk_spreading(
        g,
        args.methods,
        k=args.k,
        beta=args.topk_beta,
        t_max=args.topk_t_max,
        runs=args.runs,
        rng_seed=args.rng_seed,
        alpha=args.alpha,
        radius=args.radius,
        threads=args.threads,
    )
    ext = args.format
    with open(out_dir / f"tau_sweep.{ext}", "w") as fp:
        if ext == "csv":
            sweep.to_csv(fp)
        else:
            json.dump(_sweep_json(sweep), fp, indent=2)
            fp.write("\n")
    with open(out_dir / f"topk_spread.{ext}", "w") as fp:
        if ext == "csv":
            curves.to_csv(fp)
        else:
            json.dump(_curves_json(curves), fp, indent=2)
            fp.write("\n")
    if not args.quiet:
        print(f"wrote {out_dir}/tau_sweep.{ext} and {out_dir}/topk_spread.{ext}",
              file=sys.stderr)
    return EXIT_OK


_COMMANDS = {
    "rank": _cmd_rank,
    "efficiency": _cmd_efficiency,
    "si": _cmd_si,
    "tau-sweep": _cmd_tau_sweep,
    "topk-spread": _cmd_topk,
    "experiment": _cmd_experiment,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (OSError, EdgeListParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (VitalrankError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


def run() -> None:
    raise SystemExit(main())
