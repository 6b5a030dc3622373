"""Per-gene stability selection over all targets and the ranked edge list."""

from __future__ import annotations

from dataclasses import dataclass

from joblib import Parallel, delayed

from .data import ExpressionMatrix, RegulatorSet, standardize
from .exceptions import FormatError, ParameterError
from .stability import StabilityParams, run_stability, score_area, score_original

_SCORE_FMT = "{:.12g}"


@dataclass(frozen=True)
class EdgeList:
    """Ranked candidate regulations: (tf_id, tg_id, score) in rank order.

    List position defines the rank.  Lists built by infer_network are
    sorted by decreasing score with lexicographic (tf_id, tg_id)
    tie-breaks; lists read from files keep their file order.
    """

    edges: tuple[tuple[str, str, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        for tf, tg, _ in self.edges:
            if tf == tg:
                raise ParameterError(f"self-edge {tf} -> {tg} in edge list")

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def pairs(self) -> list[tuple[str, str]]:
        return [(tf, tg) for tf, tg, _ in self.edges]


def _score_target(expr, tfs, g, params):
    """Scores of every candidate regulator of gene g, as (tf, tg, score)."""
    gene_ids = expr.gene_ids
    idx = [(i, t) for i, t in zip(tfs.tf_indices, tfs.tf_ids) if i != g]
    if not idx:
        return []
    cand = RegulatorSet(tuple(i for i, _ in idx), tuple(t for _, t in idx))
    table = run_stability(expr, cand, g, params)
    scorer = score_area if params.scoring == "area" else score_original
    sv = scorer(table, params.steps)
    return [
        (table.candidate_ids[t], gene_ids[g], float(sv.scores[t]))
        for t in range(len(table.candidate_ids))
    ]


def infer_network(
    expr: ExpressionMatrix,
    tfs: RegulatorSet,
    params: StabilityParams,
    n_jobs: int = 1,
) -> EdgeList:
    """Score every candidate regulation (t, g) with t a TF and g any gene.

    The matrix is standardized internally; zero-variance genes are skipped
    as targets (their regression is undefined) and can never be selected as
    regulators since their columns become all-zero.  Targets are
    independent, so they are distributed over ``n_jobs`` workers; the
    result is identical for any worker count.

    Returns the full candidate edge list sorted by decreasing score, ties
    broken lexicographically by (tf_id, tg_id).
    """
    std, zero_variance = standardize(expr)
    dead = set(zero_variance)
    targets = [g for g in range(std.n_genes) if std.gene_ids[g] not in dead]
    if n_jobs == 1:
        per_gene = [_score_target(std, tfs, g, params) for g in targets]
    else:
        per_gene = Parallel(n_jobs=n_jobs)(
            delayed(_score_target)(std, tfs, g, params) for g in targets
        )
    edges = [e for chunk in per_gene for e in chunk]
    edges.sort(key=lambda e: (-e[2], e[0], e[1]))
    return EdgeList(tuple(edges))


def write_edge_list(edges: EdgeList, path, max_edges: int | None = None) -> None:
    """Write ``TF<TAB>TG<TAB>score`` lines in rank order, optionally truncated."""
    if max_edges is not None and max_edges < 0:
        raise ParameterError(f"max_edges must be >= 0, got {max_edges}")
    rows = edges.edges if max_edges is None else edges.edges[:max_edges]
    with open(path, "w", encoding="utf-8") as fh:
        for tf, tg, score in rows:
            fh.write(f"{tf}\t{tg}\t{_SCORE_FMT.format(score)}\n")


def read_edge_list(path) -> EdgeList:
    """Read a ranked ``TF<TAB>TG[<TAB>score]`` list; line order is the rank.

    The score column must be present on all lines or on none; score-less
    lists get synthetic decreasing scores so downstream ranking logic sees
    a consistent ordering.  Duplicate pairs and self-edges raise
    FormatError.
    """
    rows: list[tuple[str, str, float | None]] = []
    seen: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as fh:
        for rownum, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip():
                continue
            cells = line.split("\t")
            if len(cells) not in (2, 3):
                raise FormatError(f"{path}: row {rownum} has {len(cells)} fields, expected 2 or 3")
            tf, tg = cells[0].strip(), cells[1].strip()
            if not tf or not tg:
                raise FormatError(f"{path}: row {rownum} has an empty gene id")
            if tf == tg:
                raise FormatError(f"{path}: row {rownum} is a self-edge ({tf})")
            if (tf, tg) in seen:
                raise FormatError(f"{path}: duplicate prediction for pair ({tf}, {tg})")
            seen.add((tf, tg))
            score = None
            if len(cells) == 3:
                try:
                    score = float(cells[2])
                except ValueError:
                    raise FormatError(
                        f"{path}: non-numeric score {cells[2]!r} at row {rownum}"
                    ) from None
            rows.append((tf, tg, score))
    have_scores = [s is not None for _, _, s in rows]
    if any(have_scores) and not all(have_scores):
        raise FormatError(f"{path}: some rows have a score column and some do not")
    if rows and not all(have_scores):
        total = len(rows)
        rows = [(tf, tg, float(total - i)) for i, (tf, tg, _) in enumerate(rows)]
    return EdgeList(tuple((tf, tg, float(s)) for tf, tg, s in rows))
