"""Batch command line: infer, evaluate, analyze-errors and generate.

Exit codes: 0 success, 1 usage or parameter error, 2 I/O or format error,
3 numerical failure.  Every failure prints a single diagnostic line to
stderr.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import __version__
from .data import load_expression, load_gold_standard, load_tf_list
from .error_analysis import fp_distance_profile, write_distance_profile, write_motif_counts
from .evaluation import evaluate, overall_score, permutation_pvalues, write_curve, write_summary
from .exceptions import EvaluationError, FormatError, InputError, ParameterError
from .network import infer_network, read_edge_list, write_edge_list
from .stability import StabilityParams
from .synthetic import generate_benchmark, write_benchmark

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_NUMERIC = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this tool reserves 2 for I/O.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParameterError(message)


def _write_manifest(path, entries: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for key in sorted(entries):
            value = entries[key]
            fh.write(f"{key}={'' if value is None else value}\n")


def cmd_infer(args) -> int:
    params = StabilityParams(
        runs=args.runs, steps=args.steps, alpha=args.alpha, scoring=args.score, seed=args.seed
    )
    expr = load_expression(args.expression)
    tfs = load_tf_list(args.tf_list, expr)
    edges = infer_network(expr, tfs, params, n_jobs=args.threads)
    write_edge_list(edges, args.output, max_edges=args.max_edges)
    _write_manifest(
        args.output + ".manifest",
        {
            "expression": args.expression,
            "tf_list": args.tf_list,
            "output": args.output,
            "score": args.score,
            "alpha": args.alpha,
            "steps": args.steps,
            "runs": args.runs,
            "seed": args.seed,
            "threads": args.threads,
            "max_edges": args.max_edges,
            "version": __version__,
        },
    )
    print(f"wrote {min(len(edges), args.max_edges) if args.max_edges is not None else len(edges)}"
          f" edges to {args.output}")
    return EXIT_OK


def cmd_evaluate(args) -> int:
    predictions = read_edge_list(args.predictions)
    gold = load_gold_standard(args.gold)
    report = evaluate(predictions, gold)
    os.makedirs(args.output_dir, exist_ok=True)
    write_curve(report, os.path.join(args.output_dir, "curve.tsv"))
    print(f"auroc={report.auroc:.6f}")
    print(f"aupr={report.aupr:.6f}")
    p_aupr = p_auroc = None
    if args.pvalue_draws is not None:
        p_aupr, p_auroc = permutation_pvalues(predictions, gold, args.pvalue_draws, args.seed)
        print(f"p_aupr={p_aupr:.6g}")
        print(f"p_auroc={p_auroc:.6g}")
        print(f"overall_score={overall_score(p_aupr, p_auroc):.4f}")
    write_summary(report, os.path.join(args.output_dir, "summary.tsv"), p_aupr, p_auroc)
    return EXIT_OK


def cmd_analyze_errors(args) -> int:
    predictions = read_edge_list(args.predictions)
    gold = load_gold_standard(args.gold)
    max_rank = args.max_rank if args.max_rank is not None else len(predictions)
    report = fp_distance_profile(predictions, gold, max_rank)
    os.makedirs(args.output_dir, exist_ok=True)
    write_distance_profile(report, os.path.join(args.output_dir, "distance_profile.tsv"))
    write_motif_counts(report, os.path.join(args.output_dir, "motif_counts.tsv"))
    print(f"profiled {report.ranks.size} ranks, {report.n_spurious} spurious pairs in total")
    return EXIT_OK


def cmd_generate(args) -> int:
    bench = generate_benchmark(
        n_genes=args.genes,
        n_tfs=args.tfs,
        n_samples=args.samples,
        n_edges=args.edges,
        noise_sd=args.noise_sd,
        seed=args.seed,
    )
    paths = write_benchmark(bench, args.output_dir)
    print(f"wrote {paths['expression']}, {paths['tf_list']}, {paths['gold']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grnlars", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("infer", help="rank candidate regulations from expression data")
    p.add_argument("--expression", required=True, help="tab-separated expression matrix")
    p.add_argument("--tf-list", required=True, help="one TF id per line")
    p.add_argument("--output", required=True, help="ranked edge list to write")
    p.add_argument("--score", choices=("area", "original"), default="area")
    p.add_argument("--alpha", type=float, default=0.4, help="reweighting lower bound in [0, 1]")
    p.add_argument("--steps", type=int, default=2, help="LARS steps per run")
    p.add_argument("--runs", type=int, default=8000, help="total randomized runs (even)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1, help="parallel workers over target genes")
    p.add_argument("--max-edges", type=int, default=None, help="truncate the written list")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("evaluate", help="score a ranked list against a gold standard")
    p.add_argument("--predictions", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--output-dir", default=".")
    p.add_argument("--pvalue-draws", type=int, default=None,
                   help="permutation draws for empirical p-values")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("analyze-errors", help="distance/motif profile of false positives")
    p.add_argument("--predictions", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--output-dir", default=".")
    p.set_defaults(func=cmd_analyze_errors)

    p = sub.add_parser("generate", help="write a synthetic benchmark trio")
    p.add_argument("--genes", type=int, required=True)
    p.add_argument("--tfs", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--noise-sd", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output-dir", default=".")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ParameterError as exc:
        print(f"grnlars: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"grnlars: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, EvaluationError, OSError) as exc:
        print(f"grnlars: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (InputError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"grnlars: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
