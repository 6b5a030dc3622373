#!/usr/bin/env python3
"""What the LARS kernel reports: the order in which predictors enter.

Two sanity views: on orthogonal designs the entry order is just the
correlation ranking, and once every variable has entered the fit coincides
with ordinary least squares.
"""

import numpy as np

from grnlars import lars_path

rng = np.random.default_rng(0)

# Orthonormal design: entry order == |correlation| order.
raw = rng.standard_normal((40, 6))
raw -= raw.mean(axis=0)
Q, _ = np.linalg.qr(raw)
y = rng.standard_normal(40)
y -= y.mean()
path = lars_path(Q, y, 6)
print("orthonormal design")
print("  entry order      :", path.entry_order)
print("  |correlation| sort:", tuple(int(j) for j in np.argsort(-np.abs(Q.T @ y))))

# Correlated design: LARS picks jointly useful predictors, and after the
# last step the coefficients are the least squares solution.
X = rng.standard_normal((40, 5))
X[:, 3] = 0.9 * X[:, 0] + 0.4 * rng.standard_normal(40)  # near-duplicate of column 0
X -= X.mean(axis=0)
y = X[:, 0] - 0.5 * X[:, 2] + 0.3 * rng.standard_normal(40)
y -= y.mean()
path = lars_path(X, y, 5)
beta_ols = np.linalg.solve(X.T @ X, X.T @ y)
print("\ncorrelated design")
print("  entry order:", path.entry_order)
print("  coef (LARS):", np.round(path.coef, 4))
print("  coef (OLS) :", np.round(beta_ols, 4))
print("  fit gap    :", float(np.linalg.norm(X @ path.coef - X @ beta_ols)))

# Stopping early keeps a prefix of the longer path.
short = lars_path(X, y, 2)
print("\nprefix property:", short.entry_order, "==", path.entry_order[:2])
