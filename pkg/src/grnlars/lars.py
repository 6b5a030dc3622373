"""Least angle regression, reduced to what selection-frequency scoring
consumes: the order in which predictors enter the model.

The kernel is batched.  Stability selection solves thousands of small,
identically shaped regressions per target gene, so all runs of a batch
advance in lock-step through the LARS iterations and every per-step
quantity (correlations, Gram matrices, equiangular steps) is computed with
stacked linear algebra instead of a Python loop per run.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InputError, ParameterError

TIE_RTOL = 1e-12     # correlations within this relative gap of the max count as tied
STOP_RTOL = 1e-12    # stop once the max correlation falls below this fraction of its start
CENTER_ATOL = 1e-8   # tolerated column-mean magnitude for "centered" inputs
_DET_RTOL = 1e-24    # Gram determinant ratio below which the active set is rank-deficient


@dataclass(frozen=True)
class LarsPath:
    """Selection path of one regression problem.

    entry_order holds the column indices in the order they entered the
    model; coef holds the coefficients after the last completed step.
    """

    entry_order: tuple[int, ...]
    coef: np.ndarray

    @property
    def n_steps_completed(self) -> int:
        return len(self.entry_order)


def lars_path(X, y, n_steps: int) -> LarsPath:
    """Run least angle regression for up to ``n_steps`` variable entries.

    Parameters
    ----------
    X : array, shape (n_samples, n_features)
        Predictors; every column must be mean-centered.
    y : array, shape (n_samples,)
        Centered response.
    n_steps : int
        Maximum number of variables to admit.

    Returns
    -------
    LarsPath
        Ties in the entering correlation break toward the lowest column
        index.  The path ends early if the active set becomes
        rank-deficient or the residual correlation becomes negligible; on a
        full-rank design with every column admitted, coef coincides with
        the ordinary least squares solution.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if X.ndim != 2:
        raise ParameterError(f"X must be 2-d, got shape {X.shape}")
    if y.ndim != 1 or y.shape[0] != X.shape[0]:
        raise ParameterError(f"y has shape {y.shape}, expected ({X.shape[0]},)")
    n, k = X.shape
    if n < 2:
        raise ParameterError(f"need at least 2 samples, got {n}")
    if k < 1:
        raise ParameterError("need at least 1 predictor column")
    if n_steps < 1:
        raise ParameterError(f"n_steps must be >= 1, got {n_steps}")
    if not (np.isfinite(X).all() and np.isfinite(y).all()):
        raise InputError("non-finite values in the regression input")
    col_scale = np.maximum(1.0, np.abs(X).max(axis=0, initial=0.0))
    if np.any(np.abs(X.mean(axis=0)) > CENTER_ATOL * col_scale):
        raise InputError("X columns are not centered")
    if abs(y.mean()) > CENTER_ATOL * max(1.0, np.abs(y).max(initial=0.0)):
        raise InputError("y is not centered")
    entries, coef = lars_entry_batch(X[None, :, :], y[None, :], n_steps)
    order = tuple(int(j) for j in entries[0] if j >= 0)
    return LarsPath(entry_order=order, coef=coef[0])


def lars_entry_batch(X, y, n_steps: int) -> tuple[np.ndarray, np.ndarray]:
    """Advance a batch of regressions through the LARS iterations.

    Parameters
    ----------
    X : array, shape (n_runs, n_samples, n_features)
        Centered designs, one per run.
    y : array, shape (n_runs, n_samples)
        Centered responses.
    n_steps : int
        Requested path length.

    Returns
    -------
    entries : int array, shape (n_runs, n_steps)
        Column indices in entry order, padded with -1 for steps a run did
        not complete (early stop, rank-deficient active set, degenerate
        step).
    coef : array, shape (n_runs, n_features)
        Coefficients after each run's last completed step.

    Runs never interact, so results are independent of batch composition.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n_runs, n, k = X.shape
    entries = np.full((n_runs, n_steps), -1, dtype=np.int64)
    coef = np.zeros((n_runs, k))
    if n_runs == 0:
        return entries, coef
    max_steps = min(n_steps, k)
    r = y.copy()
    # Correlations are updated incrementally: after a move of length gamma
    # along direction u, X^T r decreases by gamma * (X^T u).
    c = np.matmul(r[:, None, :], X)[:, 0, :]
    stop_tol = STOP_RTOL * np.abs(c).max(axis=1)
    alive = np.abs(c).max(axis=1) > 0.0
    active = np.zeros((n_runs, k), dtype=bool)
    for step in range(max_steps):
        cabs = np.where(active, -np.inf, np.abs(c))
        cmax = cabs.max(axis=1)
        alive &= cmax > stop_tol
        if not alive.any():
            break
        # Entering variable: max |correlation| among inactive columns,
        # near-ties resolved toward the lowest index.
        j_star = (cabs >= cmax[:, None] * (1.0 - TIE_RTOL)).argmax(axis=1)
        idx = np.concatenate([entries[:, :step], j_star[:, None]], axis=1)
        idx_safe = np.where(idx >= 0, idx, 0)
        Xa = np.take_along_axis(X, idx_safe[:, None, :], axis=2)
        G = np.matmul(Xa.transpose(0, 2, 1), Xa)
        sign_det, logdet = np.linalg.slogdet(G)
        diag = np.diagonal(G, axis1=1, axis2=2)
        with np.errstate(divide="ignore"):
            logdiag = np.log(np.maximum(diag, 1e-300)).sum(axis=1)
        well_posed = (
            (sign_det > 0)
            & np.isfinite(logdet)
            & ((logdet - logdiag) > np.log(_DET_RTOL))
            & (diag > 0.0).all(axis=1)
        )
        # A rank-deficient tentative active set ends the run without
        # recording the entering variable.
        alive &= well_posed
        if not alive.any():
            break
        signs = np.sign(np.take_along_axis(c, idx_safe, axis=1))
        eye = np.eye(step + 1)
        G_solvable = np.where(alive[:, None, None], G, eye)
        rhs = np.where(alive[:, None], signs, 0.0)
        w = np.linalg.solve(G_solvable, rhs[:, :, None])[:, :, 0]
        u = np.matmul(Xa, w[:, :, None])[:, :, 0]
        a = np.matmul(u[:, None, :], X)[:, 0, :]
        active[alive, j_star[alive]] = True
        cmax_col = cmax[:, None]
        with np.errstate(divide="ignore", invalid="ignore"):
            g_lo = (cmax_col - c) / (1.0 - a)
            g_hi = (cmax_col + c) / (1.0 + a)
        open_cols = ~active & alive[:, None]
        floor = TIE_RTOL * cmax_col
        g_lo = np.where(open_cols & np.isfinite(g_lo) & (g_lo > floor), g_lo, np.inf)
        g_hi = np.where(open_cols & np.isfinite(g_hi) & (g_hi > floor), g_hi, np.inf)
        # With no competitor left the full step gamma = cmax reaches the
        # least squares fit of the active set.
        gamma = np.minimum(np.minimum(g_lo.min(axis=1), g_hi.min(axis=1)), cmax)
        degenerate = alive & ~(np.isfinite(gamma) & (gamma > 0.0))
        if degenerate.any():
            active[degenerate, j_star[degenerate]] = False
            alive &= ~degenerate
            if not alive.any():
                break
        entries[alive, step] = j_star[alive]
        move = alive
        r[move] -= gamma[move, None] * u[move]
        c[move] -= gamma[move, None] * a[move]
        rows = np.repeat(np.flatnonzero(move), step + 1)
        cols = idx_safe[move].ravel()
        np.add.at(coef, (rows, cols), (gamma[move, None] * w[move]).ravel())
    return entries, coef
