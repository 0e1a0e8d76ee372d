"""Pareto-order predicates, front extraction, suboptimality gaps, and the
Jaccard index over arm index sets.

Reward matrices are plain (K, m) float arrays: row k is the reward vector of
arm k across the m objectives.
"""

import numpy as np


def dominates(u, v) -> bool:
    """True iff u dominates v: u is componentwise >= v with at least one
    strictly greater coordinate.

    Args:
        u: (m,) reward vector.
        v: (m,) reward vector of the same length.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise ValueError(f"length mismatch: {u.shape} vs {v.shape}")
    return bool(np.all(v <= u) and np.any(u > v))


def not_dominated(v, u) -> bool:
    """True iff v is not dominated by u: v == u or v exceeds u somewhere."""
    v = np.asarray(v, dtype=float)
    u = np.asarray(u, dtype=float)
    if u.shape != v.shape:
        raise ValueError(f"length mismatch: {v.shape} vs {u.shape}")
    return bool(np.array_equal(v, u) or np.any(v > u))


def pareto_front(rewards) -> np.ndarray:
    """Indices of all rows not dominated by any other row, sorted ascending.

    Duplicated optimal rows are mutually non-dominated, so they all enter the
    front. O(K^2 m), vectorized; fine for the arm-set sizes used here.

    Args:
        rewards: (K, m) matrix, K >= 1, all entries finite.

    Returns:
        (F,) int array of arm indices, F >= 1.
    """
    values = np.asarray(rewards, dtype=float)
    if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
        raise ValueError(f"expected a non-empty (K, m) matrix, got shape {values.shape}")
    if not np.all(np.isfinite(values)):
        raise ValueError("reward matrix contains non-finite entries")
    # dominated[k] = exists j with values[j] >= values[k] everywhere and > somewhere
    ge_all = (values[:, None, :] >= values[None, :, :]).all(axis=2)
    gt_any = (values[:, None, :] > values[None, :, :]).any(axis=2)
    dominated = (ge_all & gt_any).any(axis=0)
    return np.flatnonzero(~dominated)


def psg(rewards, arm: int) -> float:
    """Pareto suboptimality gap of one arm.

    The smallest uniform boost epsilon >= 0 that makes the arm's reward
    vector non-dominated by every row; in closed form
    max(0, max_j min_i (rewards[j, i] - rewards[arm, i])).

    Args:
        rewards: (K, m) matrix.
        arm: row index of the arm.

    Returns:
        Non-negative gap; zero exactly for Pareto-optimal arms (in the
        absence of boundary ties).
    """
    values = np.asarray(rewards, dtype=float)
    if values.ndim != 2 or values.shape[0] < 1:
        raise ValueError(f"expected a non-empty (K, m) matrix, got shape {values.shape}")
    if not np.all(np.isfinite(values)):
        raise ValueError("reward matrix contains non-finite entries")
    if not 0 <= arm < values.shape[0]:
        raise ValueError(f"arm index {arm} out of range for K={values.shape[0]}")
    gaps = (values - values[arm]).min(axis=1)
    return float(max(0.0, gaps.max()))


def jaccard(a, b) -> float:
    """Jaccard index |a & b| / |a | b| between two arm index sets."""
    sa, sb = set(np.asarray(a, dtype=int).tolist()), set(np.asarray(b, dtype=int).tolist())
    union = sa | sb
    if not union:
        raise ValueError("jaccard of two empty fronts is undefined")
    return len(sa & sb) / len(union)
