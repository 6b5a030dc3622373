import numpy as np
import pytest

from grnlars import (
    EdgeList,
    ExpressionMatrix,
    ParameterError,
    RegulatorSet,
    StabilityParams,
    infer_network,
    read_edge_list,
    write_edge_list,
)
from grnlars.exceptions import FormatError

PARAMS = StabilityParams(runs=60, steps=2, alpha=0.4, seed=13)


def _expr(values, ids):
    values = np.asarray(values, dtype=float)
    return ExpressionMatrix(values, ids, tuple(f"S{i}" for i in range(values.shape[0])))


def _random_expr(seed, n, ids):
    rng = np.random.default_rng(seed)
    return _expr(rng.standard_normal((n, len(ids))), ids)


def test_two_genes_both_tfs():
    expr = _random_expr(0, 30, ("A", "B"))
    tfs = RegulatorSet((0, 1), ("A", "B"))
    edges = infer_network(expr, tfs, StabilityParams(runs=40, steps=1, seed=1))
    assert {(tf, tg) for tf, tg, _ in edges} == {("A", "B"), ("B", "A")}


def test_candidate_pair_count_matches_enumeration():
    for n_tfs, n_genes in ((2, 5), (3, 7), (4, 4)):
        ids = tuple(f"G{j}" for j in range(n_genes))
        expr = _random_expr(n_genes, 24, ids)
        tfs = RegulatorSet(tuple(range(n_tfs)), ids[:n_tfs])
        edges = infer_network(expr, tfs, StabilityParams(runs=20, steps=1, seed=2))
        enumerated = {(ids[t], ids[g]) for g in range(n_genes) for t in range(n_tfs) if t != g}
        assert {(tf, tg) for tf, tg, _ in edges} == enumerated
        assert len(edges) == n_tfs * n_genes - n_tfs


def test_perfect_driver_ranks_first():
    rng = np.random.default_rng(3)
    X = rng.standard_normal((50, 5))
    target = X[:, 2].copy()  # exact copy of TF G2
    expr = _expr(np.column_stack([X, target]), ("G0", "G1", "G2", "G3", "G4", "Y"))
    tfs = RegulatorSet((0, 1, 2, 3, 4), ("G0", "G1", "G2", "G3", "G4"))
    edges = infer_network(expr, tfs, PARAMS)
    assert edges.edges[0][:2] == ("G2", "Y")
    assert edges.edges[0][2] == 1.0


def test_scores_sorted_with_lexicographic_ties():
    edges = infer_network(_random_expr(4, 40, ("A", "B", "C")),
                          RegulatorSet((0, 1), ("A", "B")), PARAMS)
    scores = [s for _, _, s in edges]
    assert scores == sorted(scores, reverse=True)
    for (tf1, tg1, s1), (tf2, tg2, s2) in zip(edges.edges, edges.edges[1:]):
        if s1 == s2:
            assert (tf1, tg1) < (tf2, tg2)


def test_gene_order_invariance():
    ids = ("A", "B", "C", "D")
    expr = _random_expr(5, 36, ids)
    tfs = RegulatorSet((0, 1), ("A", "B"))
    base = infer_network(expr, tfs, PARAMS)
    perm = [2, 0, 3, 1]
    permuted_ids = tuple(ids[j] for j in perm)
    permuted = _expr(expr.values[:, perm], permuted_ids)
    tfs_perm = RegulatorSet((permuted_ids.index("A"), permuted_ids.index("B")), ("A", "B"))
    assert infer_network(permuted, tfs_perm, PARAMS).edges == base.edges


def test_end_to_end_determinism_and_job_invariance():
    expr = _random_expr(6, 30, ("A", "B", "C", "D", "E"))
    tfs = RegulatorSet((0, 1, 2), ("A", "B", "C"))
    one = infer_network(expr, tfs, PARAMS, n_jobs=1)
    again = infer_network(expr, tfs, PARAMS, n_jobs=1)
    multi = infer_network(expr, tfs, PARAMS, n_jobs=2)
    assert one.edges == again.edges == multi.edges


def test_per_gene_independence():
    ids = ("A", "B", "C", "D")
    expr = _random_expr(7, 32, ids)
    tfs = RegulatorSet((0, 1), ("A", "B"))
    base = infer_network(expr, tfs, PARAMS)
    tweaked_values = expr.values.copy()
    tweaked_values[:, 3] = np.random.default_rng(99).standard_normal(32)  # unrelated gene D
    tweaked = infer_network(_expr(tweaked_values, ids), tfs, PARAMS)
    base_c = sorted(e for e in base.edges if e[1] == "C")
    tweaked_c = sorted(e for e in tweaked.edges if e[1] == "C")
    assert base_c == tweaked_c


def test_tf_without_candidates_contributes_no_edges():
    expr = _random_expr(8, 30, ("T", "G"))
    tfs = RegulatorSet((0,), ("T",))
    edges = infer_network(expr, tfs, StabilityParams(runs=40, steps=1, seed=4))
    assert {(tf, tg) for tf, tg, _ in edges} == {("T", "G")}


def test_zero_variance_target_skipped():
    rng = np.random.default_rng(9)
    values = rng.standard_normal((30, 3))
    values[:, 2] = 4.2  # constant gene
    expr = _expr(values, ("A", "B", "FLAT"))
    tfs = RegulatorSet((0, 1), ("A", "B"))
    edges = infer_network(expr, tfs, StabilityParams(runs=40, steps=1, seed=5))
    assert all(tg != "FLAT" for _, tg, _ in edges)


def test_edge_list_rejects_self_edges():
    with pytest.raises(ParameterError):
        EdgeList((("A", "A", 1.0),))


def test_write_read_round_trip(tmp_path):
    edges = infer_network(_random_expr(10, 30, ("A", "B", "C")),
                          RegulatorSet((0, 1), ("A", "B")), PARAMS)
    path = tmp_path / "edges.tsv"
    write_edge_list(edges, path)
    back = read_edge_list(path)
    assert back.pairs() == edges.pairs()


def test_write_edge_list_truncation(tmp_path):
    edges = EdgeList(tuple((f"T{i}", "G", 1.0 - i / 10) for i in range(8)))
    path = tmp_path / "edges.tsv"
    write_edge_list(edges, path, max_edges=3)
    assert len(path.read_text().splitlines()) == 3


def test_read_edge_list_without_scores(tmp_path):
    path = tmp_path / "edges.tsv"
    path.write_text("T1\tG1\nT2\tG2\nT1\tG2\n", encoding="utf-8")
    edges = read_edge_list(path)
    assert edges.pairs() == [("T1", "G1"), ("T2", "G2"), ("T1", "G2")]
    scores = [s for _, _, s in edges]
    assert scores == sorted(scores, reverse=True)


def test_read_edge_list_rejects_duplicates_and_mixed_scores(tmp_path):
    dup = tmp_path / "dup.tsv"
    dup.write_text("T1\tG1\t0.5\nT1\tG1\t0.4\n", encoding="utf-8")
    with pytest.raises(FormatError, match="duplicate"):
        read_edge_list(dup)
    mixed = tmp_path / "mixed.tsv"
    mixed.write_text("T1\tG1\t0.5\nT2\tG1\n", encoding="utf-8")
    with pytest.raises(FormatError, match="score column"):
        read_edge_list(mixed)
