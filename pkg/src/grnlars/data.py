"""Expression matrices, regulator sets and gold standards.

All file formats are plain UTF-8 tab-separated text: expression files carry
gene identifiers in the first row and one experiment per subsequent row, TF
lists carry one gene identifier per line, and gold standards carry
``TF<TAB>TG[<TAB>label]`` rows with label 0 or 1 (default 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import FormatError, ParameterError

# Columns whose sample deviation is below this (relative to the mean scale)
# are treated as constant and mapped to all-zero columns by standardize().
ZERO_VARIANCE_RTOL = 1e-13


@dataclass(frozen=True)
class ExpressionMatrix:
    """Expression levels for n_samples experiments over n_genes genes."""

    values: np.ndarray
    gene_ids: tuple[str, ...]
    sample_ids: tuple[str, ...]

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "gene_ids", tuple(self.gene_ids))
        object.__setattr__(self, "sample_ids", tuple(self.sample_ids))
        if values.ndim != 2:
            raise ParameterError(f"expression values must be 2-d, got shape {values.shape}")
        n, p = values.shape
        if len(self.gene_ids) != p:
            raise ParameterError(f"{len(self.gene_ids)} gene ids for {p} columns")
        if len(self.sample_ids) != n:
            raise ParameterError(f"{len(self.sample_ids)} sample ids for {n} rows")
        if len(set(self.gene_ids)) != p:
            raise ParameterError("gene ids are not unique")
        if len(set(self.sample_ids)) != n:
            raise ParameterError("sample ids are not unique")
        if not np.isfinite(values).all():
            raise ParameterError("expression values contain non-finite entries")
        object.__setattr__(self, "_gene_index", {g: j for j, g in enumerate(self.gene_ids)})

    @property
    def n_samples(self) -> int:
        return self.values.shape[0]

    @property
    def n_genes(self) -> int:
        return self.values.shape[1]

    def gene_index(self, gene_id: str) -> int:
        return self._gene_index[gene_id]


@dataclass(frozen=True)
class RegulatorSet:
    """Candidate regulators, as column indices into an ExpressionMatrix."""

    tf_indices: tuple[int, ...]
    tf_ids: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "tf_indices", tuple(int(i) for i in self.tf_indices))
        object.__setattr__(self, "tf_ids", tuple(self.tf_ids))
        if not self.tf_indices:
            raise ParameterError("regulator set is empty")
        if len(self.tf_indices) != len(self.tf_ids):
            raise ParameterError("tf_indices and tf_ids lengths differ")
        if len(set(self.tf_indices)) != len(self.tf_indices):
            raise ParameterError("duplicate regulator indices")
        if any(i < 0 for i in self.tf_indices):
            raise ParameterError("negative regulator index")

    def __len__(self) -> int:
        return len(self.tf_indices)


@dataclass(frozen=True)
class GoldStandard:
    """Verified regulations: directed (tf, tg) pairs, optionally with explicit negatives."""

    positives: frozenset[tuple[str, str]]
    negatives: frozenset[tuple[str, str]]
    gene_universe: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "positives", frozenset(self.positives))
        object.__setattr__(self, "negatives", frozenset(self.negatives))
        object.__setattr__(self, "gene_universe", frozenset(self.gene_universe))
        if self.positives & self.negatives:
            raise ParameterError("pairs labeled both positive and negative")
        if any(a == b for a, b in self.positives):
            raise ParameterError("self-loop in positive regulations")
        for a, b in self.positives | self.negatives:
            if a not in self.gene_universe or b not in self.gene_universe:
                raise ParameterError(f"pair ({a}, {b}) outside the gene universe")


def load_expression(path) -> ExpressionMatrix:
    """Read a tab-separated expression file (header row of gene ids, one
    experiment per subsequent row).  Sample ids are synthesized as S1, S2, ...

    Raises FormatError on ragged rows, non-numeric cells or duplicate ids.
    """
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise FormatError(f"{path}: empty expression file")
    gene_ids = lines[0].split("\t")
    if len(set(gene_ids)) != len(gene_ids):
        dupes = sorted({g for g in gene_ids if gene_ids.count(g) > 1})
        raise FormatError(f"{path}: duplicate gene ids {dupes}")
    p = len(gene_ids)
    rows = []
    for rownum, line in enumerate(lines[1:], start=2):
        cells = line.split("\t")
        if len(cells) != p:
            raise FormatError(f"{path}: row {rownum} has {len(cells)} fields, expected {p}")
        row = np.empty(p)
        for j, cell in enumerate(cells):
            try:
                row[j] = float(cell)
            except ValueError:
                raise FormatError(
                    f"{path}: non-numeric value {cell!r} at row {rownum}, column {gene_ids[j]}"
                ) from None
        if not np.isfinite(row).all():
            j = int(np.flatnonzero(~np.isfinite(row))[0])
            raise FormatError(f"{path}: non-finite value at row {rownum}, column {gene_ids[j]}")
        rows.append(row)
    values = np.vstack(rows) if rows else np.empty((0, p))
    sample_ids = tuple(f"S{i}" for i in range(1, len(rows) + 1))
    return ExpressionMatrix(values, tuple(gene_ids), sample_ids)


def save_expression(expr: ExpressionMatrix, path) -> None:
    """Write an expression matrix in the tab-separated format load_expression reads.

    Values are printed with shortest round-trip precision, so reloading
    reproduces them exactly.
    """
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\t".join(expr.gene_ids) + "\n")
        for row in expr.values:
            fh.write("\t".join(repr(float(v)) for v in row) + "\n")


def load_tf_list(path, expr: ExpressionMatrix) -> RegulatorSet:
    """Read a one-id-per-line TF list and resolve it against expr's genes.

    Duplicate ids are collapsed (first occurrence wins); ids absent from the
    matrix raise FormatError listing every offender.
    """
    with open(path, encoding="utf-8") as fh:
        raw = [ln.strip() for ln in fh]
    ids = []
    seen = set()
    for tf in raw:
        if tf and tf not in seen:
            ids.append(tf)
            seen.add(tf)
    if not ids:
        raise FormatError(f"{path}: empty TF list")
    unknown = [tf for tf in ids if tf not in expr._gene_index]
    if unknown:
        raise FormatError(f"{path}: TF ids not present in the expression matrix: {unknown}")
    return RegulatorSet(tuple(expr.gene_index(tf) for tf in ids), tuple(ids))


def load_gold_standard(path) -> GoldStandard:
    """Read a gold standard of ``TF<TAB>TG[<TAB>label]`` rows.

    The label column is optional and defaults to 1; duplicate rows collapse,
    conflicting labels for the same pair raise FormatError.
    """
    labels: dict[tuple[str, str], int] = {}
    universe = set()
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
            if len(cells) == 3:
                lab = cells[2].strip()
                if lab not in ("0", "1"):
                    raise FormatError(f"{path}: row {rownum} has label {lab!r}, expected 0 or 1")
                label = int(lab)
            else:
                label = 1
            pair = (tf, tg)
            if pair in labels and labels[pair] != label:
                raise FormatError(f"{path}: conflicting labels for pair {pair}")
            if label == 1 and tf == tg:
                raise FormatError(f"{path}: row {rownum} is a positive self-loop ({tf})")
            labels[pair] = label
            universe.update(pair)
    positives = frozenset(p for p, lab in labels.items() if lab == 1)
    negatives = frozenset(p for p, lab in labels.items() if lab == 0)
    return GoldStandard(positives, negatives, frozenset(universe))


def standardize(expr: ExpressionMatrix) -> tuple[ExpressionMatrix, tuple[str, ...]]:
    """Mean-center each gene and scale it to unit sample variance (ddof=1).

    Numerically constant columns become all-zero instead of dividing by
    zero; their gene ids are returned as the second element so callers can
    report or skip them.
    """
    if expr.n_samples < 2:
        raise ParameterError(f"standardize needs at least 2 samples, got {expr.n_samples}")
    values = expr.values
    means = values.mean(axis=0)
    sds = values.std(axis=0, ddof=1)
    flat = sds <= ZERO_VARIANCE_RTOL * np.maximum(1.0, np.abs(means))
    safe_sd = np.where(flat, 1.0, sds)
    out = (values - means) / safe_sd
    out[:, flat] = 0.0
    zero_variance = tuple(expr.gene_ids[j] for j in np.flatnonzero(flat))
    return ExpressionMatrix(out, expr.gene_ids, expr.sample_ids), zero_variance
