"""Scoring of ranked edge lists against a gold standard.

The evaluable universe follows the gold standard: with explicit negatives,
only labeled pairs are scored; without them, every predicted pair that is
not a known positive counts as negative.  Evaluable pairs missing from the
ranked list are appended in lexicographic order so recall reaches 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .data import GoldStandard
from .exceptions import EvaluationError, ParameterError
from .network import EdgeList

_SEED_MASK = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class EvaluationReport:
    """Confusion counts and curves over every cutoff of a ranked list."""

    pair_order: tuple[tuple[str, str], ...]
    labels: np.ndarray
    tp: np.ndarray
    fp: np.ndarray
    fn: np.ndarray
    tn: np.ndarray
    precision: np.ndarray
    recall: np.ndarray
    fallout: np.ndarray
    auroc: float
    aupr: float
    n_positives: int
    n_negatives: int


def _evaluable_ranking(predictions: EdgeList, gold: GoldStandard):
    """Restrict predictions to evaluable pairs and complete the ranking."""
    positives = gold.positives
    predicted = predictions.pairs()
    if len(set(predicted)) != len(predicted):
        raise EvaluationError("prediction list contains duplicate pairs")
    if gold.negatives:
        evaluable = positives | gold.negatives
        ranked = [p for p in predicted if p in evaluable]
    else:
        ranked = predicted
        evaluable = set(ranked) | positives
    missing = sorted(evaluable - set(ranked))
    order = ranked + missing
    labels = np.fromiter((p in positives for p in order), dtype=bool, count=len(order))
    n_pos = int(labels.sum())
    n_neg = len(order) - n_pos
    if n_pos == 0:
        raise EvaluationError("no evaluable positive pairs")
    if n_neg == 0:
        raise EvaluationError("no evaluable negative pairs")
    return order, labels, n_pos, n_neg


def _rank_metrics(labels: np.ndarray, n_pos: int, n_neg: int) -> tuple[float, float]:
    """AUROC and AUPR of a ranking given its boolean label vector."""
    tp = np.cumsum(labels)
    auroc = float(tp[~labels].sum() / (n_pos * n_neg))
    ranks = np.arange(1, labels.size + 1)
    aupr = float((tp[labels] / ranks[labels]).sum() / n_pos)
    return auroc, aupr


def evaluate(predictions: EdgeList, gold: GoldStandard) -> EvaluationReport:
    """Compute confusion counts, ROC/PR curves, AUROC and AUPR.

    AUROC integrates recall over fall-out by trapezoids; AUPR sums the
    precision at each positive's rank divided by the number of positives.
    Tied scores keep the list's stored order.
    """
    if len(predictions) == 0:
        raise ParameterError("empty prediction list")
    order, labels, n_pos, n_neg = _evaluable_ranking(predictions, gold)
    ranks = np.arange(1, labels.size + 1)
    tp = np.cumsum(labels)
    fp = ranks - tp
    fn = n_pos - tp
    tn = n_neg - fp
    precision = tp / ranks
    recall = tp / n_pos
    fallout = fp / n_neg
    auroc = float(np.trapezoid(np.concatenate(([0.0], recall)), np.concatenate(([0.0], fallout))))
    aupr = float(precision[labels].sum() / n_pos)
    return EvaluationReport(
        pair_order=tuple(order),
        labels=labels,
        tp=tp,
        fp=fp,
        fn=fn,
        tn=tn,
        precision=precision,
        recall=recall,
        fallout=fallout,
        auroc=auroc,
        aupr=aupr,
        n_positives=n_pos,
        n_negatives=n_neg,
    )


def overall_score(p_aupr: float, p_auroc: float) -> float:
    """Combined significance of the two p-values: -(log10 p_aupr + log10 p_auroc)/2."""
    for name, p in (("p_aupr", p_aupr), ("p_auroc", p_auroc)):
        if not (0.0 < p <= 1.0) or math.isnan(p):
            raise ParameterError(f"{name} must lie in (0, 1], got {p}")
    return -0.5 * (math.log10(p_aupr) + math.log10(p_auroc))


def permutation_pvalues(
    predictions: EdgeList,
    gold: GoldStandard,
    n_draws: int,
    seed: int = 0,
) -> tuple[float, float]:
    """Empirical p-values of AUPR and AUROC under random rankings.

    Draws uniformly random permutations of the evaluable pair list and
    reports p = (1 + #draws with metric >= observed) / (n_draws + 1) for
    each metric.
    """
    if n_draws < 100:
        raise ParameterError(f"n_draws must be >= 100, got {n_draws}")
    _, labels, n_pos, n_neg = _evaluable_ranking(predictions, gold)
    obs_auroc, obs_aupr = _rank_metrics(labels, n_pos, n_neg)
    rng = np.random.default_rng(np.random.SeedSequence((seed & _SEED_MASK, 0x70)))
    ge_auroc = 0
    ge_aupr = 0
    for _ in range(n_draws):
        drawn = rng.permutation(labels)
        auroc, aupr = _rank_metrics(drawn, n_pos, n_neg)
        ge_auroc += auroc >= obs_auroc
        ge_aupr += aupr >= obs_aupr
    p_auroc = (1 + ge_auroc) / (n_draws + 1)
    p_aupr = (1 + ge_aupr) / (n_draws + 1)
    return p_aupr, p_auroc


def write_curve(report: EvaluationReport, path) -> None:
    """Write the per-rank curve as rank, TP, FP, precision, recall, fallout."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("rank\tTP\tFP\tprecision\trecall\tfallout\n")
        for i in range(report.labels.size):
            fh.write(
                f"{i + 1}\t{report.tp[i]}\t{report.fp[i]}"
                f"\t{report.precision[i]:.10g}\t{report.recall[i]:.10g}\t{report.fallout[i]:.10g}\n"
            )


def write_summary(
    report: EvaluationReport,
    path,
    p_aupr: float | None = None,
    p_auroc: float | None = None,
) -> None:
    """Write the scalar summary; includes the overall score when p-values are given."""
    lines = [
        f"auroc\t{report.auroc:.10g}",
        f"aupr\t{report.aupr:.10g}",
        f"n_positives\t{report.n_positives}",
        f"n_negatives\t{report.n_negatives}",
    ]
    if p_aupr is not None and p_auroc is not None:
        lines.append(f"p_aupr\t{p_aupr:.10g}")
        lines.append(f"p_auroc\t{p_auroc:.10g}")
        lines.append(f"overall_score\t{overall_score(p_aupr, p_auroc):.10g}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
