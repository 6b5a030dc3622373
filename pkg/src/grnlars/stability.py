"""Randomized LARS runs per target gene and the selection-frequency scores.

Each of the R runs draws half of the experiments and one multiplicative
weight per candidate regulator from Uniform[alpha, 1], then records which
regulators enter the first L LARS steps.  Runs come in pairs: one random
split of the experiments yields two halves, each run as a full problem with
its own weights.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .data import ExpressionMatrix, RegulatorSet
from .exceptions import InputError, ParameterError
from .lars import lars_entry_batch

_SEED_MASK = 0xFFFFFFFFFFFFFFFF
# Loose sanity thresholds for "this matrix has been standardized".
_STD_MEAN_ATOL = 1e-6
_STD_SD_ATOL = 1e-3

SCORINGS = ("area", "original")


@dataclass(frozen=True)
class StabilityParams:
    """Parameters of the randomized selection procedure.

    runs is the total number of LARS runs R (must be even: runs come in
    split pairs), steps the LARS path length L, alpha the lower bound of
    the per-regulator reweighting interval, scoring either "area" or
    "original".
    """

    runs: int = 8000
    steps: int = 2
    alpha: float = 0.4
    scoring: str = "area"
    seed: int = 0

    def __post_init__(self):
        if self.runs < 2 or self.runs % 2 != 0:
            raise ParameterError(f"runs must be a positive even integer, got {self.runs}")
        if self.steps < 1:
            raise ParameterError(f"steps must be >= 1, got {self.steps}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ParameterError(f"alpha must lie in [0, 1], got {self.alpha}")
        if self.scoring not in SCORINGS:
            raise ParameterError(f"scoring must be one of {SCORINGS}, got {self.scoring!r}")
        if not isinstance(self.seed, int):
            raise ParameterError(f"seed must be an integer, got {type(self.seed).__name__}")


@dataclass(frozen=True)
class FrequencyTable:
    """Selection counts for one target gene.

    counts[t, l] is the number of runs in which candidate t entered within
    the first l+1 LARS steps; rows follow ``candidates`` (column indices
    into the expression matrix, ordered by gene id so that results do not
    depend on column order).
    """

    counts: np.ndarray
    runs: int
    target: int
    candidates: tuple[int, ...]
    candidate_ids: tuple[str, ...]

    @property
    def frequencies(self) -> np.ndarray:
        return self.counts / self.runs

    @property
    def n_steps(self) -> int:
        return self.counts.shape[1]


@dataclass(frozen=True)
class ScoreVector:
    """Per-candidate scores in [0, 1] for one target gene."""

    scores: np.ndarray
    target: int
    scoring: str
    candidates: tuple[int, ...]
    candidate_ids: tuple[str, ...]


def _gene_stream_key(gene_id: str) -> int:
    """Stable 64-bit key for a gene id (process- and platform-independent)."""
    digest = hashlib.blake2b(gene_id.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _check_standardized(values: np.ndarray, columns: np.ndarray) -> None:
    sub = values[:, columns]
    means = sub.mean(axis=0)
    if np.any(np.abs(means) > _STD_MEAN_ATOL):
        raise InputError("expression matrix is not standardized (non-zero column mean)")
    sds = sub.std(axis=0, ddof=1)
    bad = (sds != 0.0) & (np.abs(sds - 1.0) > _STD_SD_ATOL)
    if np.any(bad):
        raise InputError("expression matrix is not standardized (column variance != 1)")


def run_stability(
    expr: ExpressionMatrix,
    candidates: RegulatorSet,
    target: int,
    params: StabilityParams,
    max_batch_bytes: int = 1 << 27,
) -> FrequencyTable:
    """Accumulate the selection-frequency table for one target gene.

    Parameters
    ----------
    expr : ExpressionMatrix
        Standardized expression matrix (see data.standardize).
    candidates : RegulatorSet
        Candidate regulators for this target; must not contain the target.
    target : int
        Column index of the target gene.
    params : StabilityParams
    max_batch_bytes : int
        Soft cap on the size of one stacked design tensor; only affects
        speed and memory, never the result.

    The table is a deterministic function of (params.seed, the target's
    gene id, run index): each split pair owns a random stream spawned from
    those inputs, so runs can execute in any order or in parallel and still
    produce identical counts.
    """
    n = expr.n_samples
    half_hi = (n + 1) // 2
    half_lo = n - half_hi
    if half_lo < 2:
        raise ParameterError(f"half-samples of {half_hi} and {half_lo} rows are too small (need >= 2)")
    if not 0 <= target < expr.n_genes:
        raise ParameterError(f"target index {target} out of range")
    if target in candidates.tf_indices:
        raise ParameterError(f"target gene {expr.gene_ids[target]} is in its own candidate set")
    if max(candidates.tf_indices) >= expr.n_genes:
        raise ParameterError("candidate index out of range")

    # Canonical candidate order (by gene id) makes weights, tie-breaks and
    # random streams independent of the caller's column order.
    order = sorted(range(len(candidates)), key=lambda i: candidates.tf_ids[i])
    cand_idx = np.array([candidates.tf_indices[i] for i in order], dtype=np.intp)
    cand_ids = tuple(candidates.tf_ids[i] for i in order)
    k = len(cand_idx)
    _check_standardized(expr.values, np.append(cand_idx, target))

    Xc = np.ascontiguousarray(expr.values[:, cand_idx])
    y = expr.values[:, target]
    L = params.steps
    n_pairs = params.runs // 2
    root = np.random.SeedSequence((params.seed & _SEED_MASK, _gene_stream_key(expr.gene_ids[target])))
    streams = root.spawn(n_pairs)

    per_pair_bytes = 16 * half_hi * k
    batch = int(max(1, min(n_pairs, max_batch_bytes // max(1, per_pair_bytes))))
    # counts[t, l] = cumulative sum over steps of "entered exactly at step s".
    new_entries = np.zeros((k, L), dtype=np.int64)
    for start in range(0, n_pairs, batch):
        chunk = streams[start : start + batch]
        b = len(chunk)
        perms = np.empty((b, n), dtype=np.intp)
        weights = np.empty((b, 2, k))
        for i, stream in enumerate(chunk):
            rng = np.random.default_rng(stream)
            perms[i] = rng.permutation(n)
            weights[i, 0] = rng.uniform(params.alpha, 1.0, k)
            weights[i, 1] = rng.uniform(params.alpha, 1.0, k)
        for half, (lo, hi) in enumerate(((0, half_hi), (half_hi, n))):
            rows = perms[:, lo:hi]
            Xb = Xc[rows]
            Xb *= weights[:, half][:, None, :]
            # Re-center the halves (the LARS intercept); variances stay
            # untouched so the reweighting is not cancelled.
            Xb -= Xb.mean(axis=1, keepdims=True)
            yb = y[rows]
            yb -= yb.mean(axis=1, keepdims=True)
            entries, _ = lars_entry_batch(Xb, yb, L)
            run_i, step_i = np.nonzero(entries >= 0)
            np.add.at(new_entries, (entries[run_i, step_i], step_i), 1)
    counts = np.cumsum(new_entries, axis=1)
    return FrequencyTable(
        counts=counts,
        runs=params.runs,
        target=target,
        candidates=tuple(int(i) for i in cand_idx),
        candidate_ids=cand_ids,
    )


def _check_width(table: FrequencyTable, steps: int) -> None:
    if not 1 <= steps <= table.n_steps:
        raise ParameterError(f"steps={steps} exceeds the table width {table.n_steps}")


def score_original(table: FrequencyTable, steps: int) -> ScoreVector:
    """Frequency of selection within the first ``steps`` LARS steps."""
    _check_width(table, steps)
    scores = table.counts[:, steps - 1] / table.runs
    return ScoreVector(scores, table.target, "original", table.candidates, table.candidate_ids)


def score_area(table: FrequencyTable, steps: int) -> ScoreVector:
    """Normalized area under the selection-frequency curve up to ``steps``.

    Equals the average of the original scores over path lengths 1..steps,
    so candidates frequently selected early outrank candidates that only
    appear at the last step.
    """
    _check_width(table, steps)
    scores = table.counts[:, :steps].sum(axis=1) / (table.runs * steps)
    return ScoreVector(scores, table.target, "area", table.candidates, table.candidate_ids)
