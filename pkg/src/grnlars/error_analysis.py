"""Where do false positives land on the true network?

A predicted pair absent from the gold standard is characterized by the
shortest-path distance between its endpoints on the undirected closure of
the gold network, and distance-2 pairs are further classified into the
three directed motifs that can realize them (common parent, common child,
two-step chain).  Hypergeometric confidence bands say whether the observed
distance mix among the first r false positives deviates from drawing r
spurious pairs at random.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.stats import hypergeom

from .data import GoldStandard
from .exceptions import ParameterError
from .network import EdgeList

DISTANCE_CLASSES = ("1", "2", "3", "4", ">4", "unreachable")

# The quantile is the smallest k with CDF(k) >= a.  CDF values are rationals
# that can equal the tail level exactly (e.g. 3/120 = 0.025); this guard
# keeps one-ulp rounding in the floating CDF from bumping the quantile up.
_QUANTILE_GUARD = 1e-9

SIBLING = "sibling"
COUPLE = "couple"
GRANDPARENT_AB = "grandparent_ab"  # first argument is the grandparent
GRANDPARENT_BA = "grandparent_ba"  # second argument is the grandparent


class GoldGraph:
    """Directed gold network plus its undirected closure and a BFS cache.

    Queries are read-only after construction; the per-source distance cache
    is filled lazily and is safe to share between threads under the GIL
    (results are identical to sequential use).
    """

    def __init__(self, gold: GoldStandard):
        self.nodes = frozenset(gold.gene_universe)
        self.parents: dict[str, set[str]] = {g: set() for g in self.nodes}
        self.children: dict[str, set[str]] = {g: set() for g in self.nodes}
        self.neighbors: dict[str, set[str]] = {g: set() for g in self.nodes}
        for tf, tg in gold.positives:
            self.children[tf].add(tg)
            self.parents[tg].add(tf)
            self.neighbors[tf].add(tg)
            self.neighbors[tg].add(tf)
        self._bfs_cache: dict[str, dict[str, int]] = {}

    def _require(self, gene: str) -> None:
        if gene not in self.nodes:
            raise KeyError(f"unknown gene id {gene!r}")

    def _levels(self, source: str) -> dict[str, int]:
        cached = self._bfs_cache.get(source)
        if cached is not None:
            return cached
        levels = {source: 0}
        queue = deque([source])
        while queue:
            node = queue.popleft()
            nxt = levels[node] + 1
            for other in self.neighbors[node]:
                if other not in levels:
                    levels[other] = nxt
                    queue.append(other)
        self._bfs_cache[source] = levels
        return levels

    def distance(self, a: str, b: str) -> float:
        """Shortest-path length between a and b ignoring edge direction.

        Returns math.inf when the genes lie in different components.
        """
        self._require(a)
        self._require(b)
        return float(self._levels(a).get(b, math.inf))


def shortest_distance(graph: GoldGraph, a: str, b: str) -> float:
    return graph.distance(a, b)


def classify_distance2(graph: GoldGraph, a: str, b: str) -> frozenset[str]:
    """Directed motifs realizing a distance-2 pair: every one that holds.

    sibling: a and b share a parent; couple: a and b share a child;
    grandparent_ab / grandparent_ba: a two-step directed chain a -> m -> b
    or b -> m -> a.  A pair can show several motifs at once.
    """
    if graph.distance(a, b) != 2:
        raise ParameterError(f"pair ({a}, {b}) is not at distance 2")
    motifs = set()
    if graph.parents[a] & graph.parents[b]:
        motifs.add(SIBLING)
    if graph.children[a] & graph.children[b]:
        motifs.add(COUPLE)
    if graph.children[a] & graph.parents[b]:
        motifs.add(GRANDPARENT_AB)
    if graph.children[b] & graph.parents[a]:
        motifs.add(GRANDPARENT_BA)
    return frozenset(motifs)


def hypergeom_ci(
    n_population: int,
    p_class: float,
    n_drawn: int,
    level: float = 0.95,
) -> tuple[float, float]:
    """Confidence band for the proportion of a class among n_drawn draws.

    Draws come without replacement from a population of n_population pairs
    of which round(p_class * n_population) belong to the class; the band is
    [q_{(1-level)/2} / n_drawn, q_{1-(1-level)/2} / n_drawn] with q the
    hypergeometric quantile.  By convention n_drawn = 0 yields (0, 1).
    """
    if not 0.0 < level < 1.0:
        raise ParameterError(f"level must lie in (0, 1), got {level}")
    if not 0.0 <= p_class <= 1.0:
        raise ParameterError(f"p_class must lie in [0, 1], got {p_class}")
    if n_population < 0 or not 0 <= n_drawn <= n_population:
        raise ParameterError(
            f"need 0 <= n_drawn <= n_population, got {n_drawn} and {n_population}"
        )
    if n_drawn == 0:
        return (0.0, 1.0)
    successes = int(math.floor(p_class * n_population + 0.5))
    tail = (1.0 - level) / 2.0
    lo = float(hypergeom.ppf(tail - _QUANTILE_GUARD, n_population, successes, n_drawn))
    hi = float(hypergeom.ppf(1.0 - tail - _QUANTILE_GUARD, n_population, successes, n_drawn))
    return (lo / n_drawn, hi / n_drawn)


@dataclass(frozen=True)
class DistanceReport:
    """Distance mix of false positives as the prediction list grows.

    Row i covers the first ranks[i] predictions; proportions, ci_low and
    ci_high have one column per entry of ``classes``.  Motif counts are
    cumulative over distance-2 false positives (a pair showing several
    motifs increments several counters).
    """

    ranks: np.ndarray
    n_false_positives: np.ndarray
    proportions: np.ndarray
    ci_low: np.ndarray
    ci_high: np.ndarray
    baseline: np.ndarray
    n_spurious: int
    sibling: np.ndarray
    couple: np.ndarray
    grandparent: np.ndarray
    classes: tuple[str, ...] = DISTANCE_CLASSES


def _distance_class(graph: GoldGraph, tf: str, tg: str) -> int:
    if tf not in graph.nodes or tg not in graph.nodes:
        return len(DISTANCE_CLASSES) - 1
    d = graph.distance(tf, tg)
    if d <= 4:
        return int(d) - 1
    if math.isinf(d):
        return len(DISTANCE_CLASSES) - 1
    return 4


def _ci_bands(n_spurious, baseline, n_fp):
    """Vectorized hypergeometric bands over the distinct draw counts."""
    n_classes = baseline.size
    lo = np.zeros((n_fp.size, n_classes))
    hi = np.ones((n_fp.size, n_classes))
    uniq, inverse = np.unique(n_fp, return_inverse=True)
    nonzero = uniq > 0
    if n_spurious > 0 and nonzero.any():
        draws = uniq[nonzero].astype(np.int64)
        lo_u = np.zeros((uniq.size, n_classes))
        hi_u = np.ones((uniq.size, n_classes))
        for j in range(n_classes):
            successes = int(math.floor(baseline[j] * n_spurious + 0.5))
            q_lo = hypergeom.ppf(0.025 - _QUANTILE_GUARD, n_spurious, successes, draws)
            q_hi = hypergeom.ppf(0.975 - _QUANTILE_GUARD, n_spurious, successes, draws)
            lo_u[nonzero, j] = q_lo / draws
            hi_u[nonzero, j] = q_hi / draws
        lo = lo_u[inverse]
        hi = hi_u[inverse]
    return lo, hi


def fp_distance_profile(
    predictions: EdgeList,
    gold: GoldStandard,
    max_rank: int,
) -> DistanceReport:
    """Cumulative distance and motif profile of false positives.

    The baseline proportions are taken over every spurious pair in the full
    prediction list (not just the first max_rank); per-rank 95% bands come
    from hypergeom_ci with the number of false positives seen so far as the
    draw count.
    """
    if max_rank < 0:
        raise ParameterError(f"max_rank must be >= 0, got {max_rank}")
    graph = GoldGraph(gold)
    positives = gold.positives
    n_classes = len(DISTANCE_CLASSES)

    spurious_class = [
        _distance_class(graph, tf, tg) for tf, tg, _ in predictions if (tf, tg) not in positives
    ]
    n_spurious = len(spurious_class)
    baseline = np.zeros(n_classes)
    if n_spurious:
        baseline = np.bincount(spurious_class, minlength=n_classes) / n_spurious

    limit = min(max_rank, len(predictions))
    ranks = np.arange(1, limit + 1, dtype=np.int64)
    counts = np.zeros(n_classes, dtype=np.int64)
    motif_counts = {SIBLING: 0, COUPLE: 0, "grandparent": 0}
    n_fp = np.zeros(limit, dtype=np.int64)
    proportions = np.zeros((limit, n_classes))
    sibling = np.zeros(limit, dtype=np.int64)
    couple = np.zeros(limit, dtype=np.int64)
    grandparent = np.zeros(limit, dtype=np.int64)
    fp_so_far = 0
    for i, (tf, tg, _) in enumerate(predictions.edges[:limit]):
        if (tf, tg) not in positives:
            cls = _distance_class(graph, tf, tg)
            counts[cls] += 1
            fp_so_far += 1
            if cls == 1:  # distance exactly 2
                motifs = classify_distance2(graph, tf, tg)
                motif_counts[SIBLING] += SIBLING in motifs
                motif_counts[COUPLE] += COUPLE in motifs
                motif_counts["grandparent"] += bool(
                    motifs & {GRANDPARENT_AB, GRANDPARENT_BA}
                )
        n_fp[i] = fp_so_far
        if fp_so_far:
            proportions[i] = counts / fp_so_far
        sibling[i] = motif_counts[SIBLING]
        couple[i] = motif_counts[COUPLE]
        grandparent[i] = motif_counts["grandparent"]
    ci_low, ci_high = _ci_bands(n_spurious, baseline, n_fp)
    return DistanceReport(
        ranks=ranks,
        n_false_positives=n_fp,
        proportions=proportions,
        ci_low=ci_low,
        ci_high=ci_high,
        baseline=baseline,
        n_spurious=n_spurious,
        sibling=sibling,
        couple=couple,
        grandparent=grandparent,
    )


def write_distance_profile(report: DistanceReport, path) -> None:
    """Tab-separated profile: rank, FP count, then proportion and band per class."""
    headers = ["rank", "n_fp"]
    for cls in report.classes:
        headers += [f"prop_{cls}", f"ci_low_{cls}", f"ci_high_{cls}"]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\t".join(headers) + "\n")
        for i in range(report.ranks.size):
            row = [str(report.ranks[i]), str(report.n_false_positives[i])]
            for j in range(len(report.classes)):
                row += [
                    f"{report.proportions[i, j]:.10g}",
                    f"{report.ci_low[i, j]:.10g}",
                    f"{report.ci_high[i, j]:.10g}",
                ]
            fh.write("\t".join(row) + "\n")


def write_motif_counts(report: DistanceReport, path) -> None:
    """Tab-separated cumulative motif counts: rank, sibling, couple, grandparent."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("rank\tsibling\tcouple\tgrandparent\n")
        for i in range(report.ranks.size):
            fh.write(
                f"{report.ranks[i]}\t{report.sibling[i]}"
                f"\t{report.couple[i]}\t{report.grandparent[i]}\n"
            )
