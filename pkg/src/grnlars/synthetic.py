"""Desk-scale synthetic benchmarks: a random TF->TG network with expression
sampled from the implied linear model.

Genes are ordered so that every edge points from a lower to a higher index,
which makes the network a DAG and the sampling a single forward pass.
Genes without parents draw standard normal expression; genes with parents
are the weighted sum of their parents plus Gaussian noise, so with
noise_sd=0 targets are exact linear functions of their regulators.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .data import ExpressionMatrix, save_expression
from .exceptions import ParameterError

_SEED_MASK = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class SyntheticBenchmark:
    expression: ExpressionMatrix
    tf_ids: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]


def _feasible_pairs(n_genes: int, n_tfs: int) -> list[tuple[int, int]]:
    return [(t, g) for g in range(1, n_genes) for t in range(min(g, n_tfs))]


def generate_benchmark(
    n_genes: int,
    n_tfs: int,
    n_samples: int,
    n_edges: int,
    noise_sd: float = 0.5,
    seed: int = 0,
) -> SyntheticBenchmark:
    """Sample a benchmark of n_samples expression profiles over n_genes genes.

    The first n_tfs genes are the regulators; n_edges regulations are drawn
    uniformly from the feasible TF->gene pairs.  Gene ids are zero-padded
    (G01, G02, ...) so lexicographic and numeric order agree.  Fixed seeds
    give bit-identical outputs.
    """
    if n_genes < 2:
        raise ParameterError(f"need at least 2 genes, got {n_genes}")
    if not 1 <= n_tfs <= n_genes:
        raise ParameterError(f"n_tfs must lie in [1, {n_genes}], got {n_tfs}")
    if n_samples < 2:
        raise ParameterError(f"need at least 2 samples, got {n_samples}")
    if noise_sd < 0:
        raise ParameterError(f"noise_sd must be >= 0, got {noise_sd}")
    feasible = _feasible_pairs(n_genes, n_tfs)
    if not 0 <= n_edges <= len(feasible):
        raise ParameterError(
            f"n_edges must lie in [0, {len(feasible)}] for {n_genes} genes"
            f" and {n_tfs} TFs, got {n_edges}"
        )
    width = len(str(n_genes))
    gene_ids = tuple(f"G{i:0{width}d}" for i in range(1, n_genes + 1))
    rng = np.random.default_rng(np.random.SeedSequence(seed & _SEED_MASK))
    chosen = rng.choice(len(feasible), size=n_edges, replace=False)
    edges_idx = sorted(feasible[i] for i in chosen)
    signs = rng.integers(0, 2, size=n_edges) * 2 - 1
    magnitudes = rng.uniform(0.75, 1.5, size=n_edges)
    weights = signs * magnitudes
    parents: dict[int, list[tuple[int, float]]] = {}
    for (t, g), w in zip(edges_idx, weights):
        parents.setdefault(g, []).append((t, float(w)))
    values = np.empty((n_samples, n_genes))
    for g in range(n_genes):
        noise = rng.standard_normal(n_samples)
        if g in parents:
            signal = sum(w * values[:, t] for t, w in parents[g])
            values[:, g] = signal + noise_sd * noise
        else:
            values[:, g] = noise
    expr = ExpressionMatrix(values, gene_ids, tuple(f"S{i}" for i in range(1, n_samples + 1)))
    edges = tuple((gene_ids[t], gene_ids[g]) for t, g in edges_idx)
    return SyntheticBenchmark(expr, gene_ids[:n_tfs], edges)


def write_benchmark(bench: SyntheticBenchmark, out_dir) -> dict[str, str]:
    """Write the benchmark trio (expression, TF list, gold standard) to out_dir."""
    os.makedirs(out_dir, exist_ok=True)
    paths = {
        "expression": os.path.join(out_dir, "expression.tsv"),
        "tf_list": os.path.join(out_dir, "tf_list.txt"),
        "gold": os.path.join(out_dir, "gold.tsv"),
    }
    save_expression(bench.expression, paths["expression"])
    with open(paths["tf_list"], "w", encoding="utf-8") as fh:
        fh.write("\n".join(bench.tf_ids) + "\n")
    with open(paths["gold"], "w", encoding="utf-8") as fh:
        for tf, tg in bench.edges:
            fh.write(f"{tf}\t{tg}\t1\n")
    return paths
