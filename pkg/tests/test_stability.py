import numpy as np
import pytest

from grnlars import (
    ExpressionMatrix,
    FrequencyTable,
    InputError,
    ParameterError,
    RegulatorSet,
    StabilityParams,
    run_stability,
    score_area,
    score_original,
    standardize,
)


def _expr(values, ids=None):
    values = np.asarray(values, dtype=float)
    ids = ids or tuple(f"G{j}" for j in range(values.shape[1]))
    raw = ExpressionMatrix(values, ids, tuple(f"S{i}" for i in range(values.shape[0])))
    std, _ = standardize(raw)
    return std


def _noisy_instance(seed=0, n=40, k=4):
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((n, k))
    y = X[:, 0] + 0.8 * X[:, 1] + 0.5 * rng.standard_normal(n)
    return _expr(np.column_stack([X, y]))


def _tf_set(expr, indices):
    return RegulatorSet(tuple(indices), tuple(expr.gene_ids[i] for i in indices))


def test_params_validation():
    with pytest.raises(ParameterError):
        StabilityParams(runs=501)
    with pytest.raises(ParameterError):
        StabilityParams(runs=0)
    with pytest.raises(ParameterError):
        StabilityParams(alpha=1.5)
    with pytest.raises(ParameterError):
        StabilityParams(steps=0)
    with pytest.raises(ParameterError):
        StabilityParams(scoring="magic")


def test_sole_candidate_always_selected():
    rng = np.random.default_rng(1)
    x = rng.standard_normal(30)
    expr = _expr(np.column_stack([x, x + 0.01 * rng.standard_normal(30)]), ("TF", "TG"))
    params = StabilityParams(runs=100, steps=2, alpha=0.3, seed=5)
    table = run_stability(expr, _tf_set(expr, [0]), 1, params)
    np.testing.assert_array_equal(table.counts, [[100, 100]])
    np.testing.assert_array_equal(score_original(table, 2).scores, [1.0])
    np.testing.assert_array_equal(score_area(table, 2).scores, [1.0])


def test_alpha_one_with_dominant_driver_gives_binary_counts():
    # alpha=1 disables reweighting; with the target equal to one TF, the
    # only randomness left (the sample split) cannot change the first entry.
    rng = np.random.default_rng(2)
    x0 = rng.standard_normal(40)
    x1 = rng.standard_normal(40)
    x2 = rng.standard_normal(40)
    expr = _expr(np.column_stack([x0, x1, x2, x0]), ("T0", "T1", "T2", "TG"))
    params = StabilityParams(runs=60, steps=1, alpha=1.0, seed=9)
    table = run_stability(expr, _tf_set(expr, [0, 1, 2]), 3, params)
    assert set(np.unique(table.counts)) <= {0, 60}
    assert table.counts[table.candidate_ids.index("T0"), 0] == 60


def test_counts_monotone_and_bounded():
    expr = _noisy_instance()
    params = StabilityParams(runs=200, steps=3, alpha=0.4, seed=3)
    table = run_stability(expr, _tf_set(expr, [0, 1, 2, 3]), 4, params)
    assert (np.diff(table.counts, axis=1) >= 0).all()
    assert table.counts.min() >= 0 and table.counts.max() <= 200


def test_column_sum_inequality_when_paths_exhaust_early():
    # only two candidates but three steps requested: runs stop after two
    # entries, so the third column sums below 3R
    expr = _noisy_instance(seed=12, k=2)
    params = StabilityParams(runs=100, steps=3, alpha=0.4, seed=1)
    table = run_stability(expr, _tf_set(expr, [0, 1]), 2, params)
    sums = table.counts.sum(axis=0)
    assert (sums <= np.arange(1, 4) * 100).all()
    assert sums[2] == 200  # both candidates always enter within two steps


def test_column_sum_equality_on_well_conditioned_data():
    expr = _noisy_instance(seed=7)
    params = StabilityParams(runs=300, steps=3, alpha=0.4, seed=11)
    table = run_stability(expr, _tf_set(expr, [0, 1, 2, 3]), 4, params)
    np.testing.assert_array_equal(table.counts.sum(axis=0), np.arange(1, 4) * 300)


def test_determinism_and_batch_independence():
    expr = _noisy_instance(seed=4)
    tfs = _tf_set(expr, [0, 1, 2, 3])
    params = StabilityParams(runs=100, steps=2, alpha=0.4, seed=21)
    t1 = run_stability(expr, tfs, 4, params)
    t2 = run_stability(expr, tfs, 4, params)
    np.testing.assert_array_equal(t1.counts, t2.counts)
    t3 = run_stability(expr, tfs, 4, params, max_batch_bytes=1)
    np.testing.assert_array_equal(t1.counts, t3.counts)


def test_candidate_order_does_not_matter():
    expr = _noisy_instance(seed=6)
    params = StabilityParams(runs=100, steps=2, alpha=0.4, seed=2)
    fwd = run_stability(expr, _tf_set(expr, [0, 1, 2, 3]), 4, params)
    rev = run_stability(expr, _tf_set(expr, [3, 1, 0, 2]), 4, params)
    assert fwd.candidate_ids == rev.candidate_ids
    np.testing.assert_array_equal(fwd.counts, rev.counts)


def test_seed_changes_counts():
    expr = _noisy_instance(seed=8)
    tfs = _tf_set(expr, [0, 1, 2, 3])
    a = run_stability(expr, tfs, 4, StabilityParams(runs=100, steps=2, alpha=0.2, seed=1))
    b = run_stability(expr, tfs, 4, StabilityParams(runs=100, steps=2, alpha=0.2, seed=2))
    assert not np.array_equal(a.counts, b.counts)


def test_run_stability_parameter_errors():
    expr = _noisy_instance()
    tfs = _tf_set(expr, [0, 1, 2, 3])
    params = StabilityParams(runs=10, steps=2)
    with pytest.raises(ParameterError, match="candidate set"):
        run_stability(expr, tfs, 0, params)
    small = _expr(np.random.default_rng(0).standard_normal((3, 3)))
    with pytest.raises(ParameterError, match="half-sample"):
        run_stability(small, _tf_set(small, [0]), 2, params)


def test_run_stability_rejects_unstandardized_input():
    rng = np.random.default_rng(5)
    raw = ExpressionMatrix(rng.standard_normal((20, 3)) * 4 + 2,
                           ("A", "B", "C"), tuple(f"S{i}" for i in range(20)))
    with pytest.raises(InputError, match="standardized"):
        run_stability(raw, RegulatorSet((0, 1), ("A", "B")), 2, StabilityParams(runs=10))


def _table(counts, runs):
    counts = np.asarray(counts, dtype=np.int64)
    k = counts.shape[0]
    return FrequencyTable(counts, runs, target=k,
                          candidates=tuple(range(k)),
                          candidate_ids=tuple(f"T{j}" for j in range(k)))


def test_score_worked_example():
    # selected 57% of the time at the first step and 81% within two
    table = _table([[57, 81]], 100)
    assert score_original(table, 1).scores[0] == pytest.approx(0.57)
    assert score_original(table, 2).scores[0] == pytest.approx(0.81)
    assert score_area(table, 2).scores[0] == pytest.approx(0.69)


def test_score_extremes():
    table = _table([[100, 100], [0, 0]], 100)
    np.testing.assert_array_equal(score_original(table, 2).scores, [1.0, 0.0])
    np.testing.assert_array_equal(score_area(table, 2).scores, [1.0, 0.0])


def test_score_width_check():
    table = _table([[10, 20]], 100)
    with pytest.raises(ParameterError):
        score_original(table, 3)
    with pytest.raises(ParameterError):
        score_area(table, 0)


def test_area_equals_mean_of_originals():
    rng = np.random.default_rng(9)
    for _ in range(20):
        runs = 200
        raw = rng.integers(0, runs + 1, size=(5, 6))
        counts = np.sort(raw, axis=1)
        table = _table(counts, runs)
        for steps in range(1, 7):
            area = score_area(table, steps).scores
            mean = np.mean([score_original(table, l).scores for l in range(1, steps + 1)], axis=0)
            np.testing.assert_allclose(area, mean, atol=1e-15)


def test_monotone_dominance():
    table = _table([[50, 80, 90], [40, 70, 90], [10, 10, 10]], 100)
    for scorer in (score_original, score_area):
        s = scorer(table, 3).scores
        assert s[0] >= s[1] >= s[2]


def test_scores_match_rank_functionals():
    # Build the table from simulated per-run ranks and compare both scores
    # with their direct definitions in terms of the rank distribution.
    rng = np.random.default_rng(10)
    k, runs, width = 6, 500, 4
    ranks = np.full((runs, k), k + 1)
    for r in range(runs):
        depth = rng.integers(1, width + 1)
        chosen = rng.permutation(k)[:depth]
        for h, t in enumerate(chosen, start=1):
            ranks[r, t] = h
    counts = np.stack([(ranks <= l).sum(axis=0) for l in range(1, width + 1)], axis=1)
    table = _table(counts, runs)
    for L in range(1, width + 1):
        p_le_L = (ranks <= L).mean(axis=0)
        np.testing.assert_allclose(score_original(table, L).scores, p_le_L, atol=1e-15)
        phi = np.zeros(k)
        for h in range(1, L + 1):
            phi += (L + 1 - h) * (ranks == h).mean(axis=0)
        np.testing.assert_allclose(score_area(table, L).scores * L, phi, atol=1e-12)
