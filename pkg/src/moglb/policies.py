"""Sequential decision policies: the online-Newton UCB learner for
multi-objective generalized linear bandits, plus three context-free
baselines (Pareto UCB, scalarized UCB, Pareto Thompson sampling).

All policies follow the same contract: ``select_arm(arms, t, rng)`` returns
an arm index for round t (1-based) and must be followed by exactly one
``update(arm, reward_vector)`` before the next selection. ``current_front()``
reports the arm index set the last selection drew from (None for the
scalarized baseline, which ranks arms on a single score).
"""

import numpy as np

from .glm import link_value
from .linalg import SpdState
from .pareto import pareto_front

GAMMA_FLOOR = 1e-12


class _BasePolicy:
    """Arm-set binding and the select/update alternation contract."""

    def __init__(self, num_objectives: int):
        if num_objectives < 1:
            raise ValueError("need at least one objective")
        self.m = int(num_objectives)
        self._arms = None
        self._pending = None  # arm index awaiting its update

    def _bind_arms(self, arms) -> np.ndarray:
        if self._arms is None:
            arms = np.asarray(arms, dtype=float)
            if arms.ndim != 2 or arms.shape[0] < 1:
                raise ValueError(f"expected a (K, d) arm matrix, got shape {arms.shape}")
            norms = np.linalg.norm(arms, axis=1)
            if np.any(norms > 1.0 + 1e-9):
                raise ValueError(f"arm norms must be <= 1, max is {norms.max():.6g}")
            self._arms = arms
        elif arms is not self._arms and not np.array_equal(arms, self._arms):
            raise ValueError("arm set changed between rounds")
        return self._arms

    def _begin_select(self, arms, t):
        if self._pending is not None:
            raise RuntimeError("select_arm called twice without an update in between")
        if t < 1:
            raise ValueError(f"round index must be >= 1, got {t}")
        return self._bind_arms(arms)

    def _begin_update(self, arm: int, reward) -> np.ndarray:
        if self._pending is None:
            raise RuntimeError("update called without a preceding select_arm")
        if arm != self._pending:
            raise ValueError(f"update for arm {arm} but arm {self._pending} was selected")
        self._pending = None
        reward = np.asarray(reward, dtype=float)
        if reward.shape != (self.m,):
            raise ValueError(f"expected reward vector of length {self.m}, got shape {reward.shape}")
        return reward

    def current_front(self):
        raise NotImplementedError


class MoglbUcb(_BasePolicy):
    """Upper-confidence-bound learner for multi-objective GLM bandits.

    Coefficients are estimated per objective with an online Newton step over
    the GLM surrogate loss, sharing a single design matrix Z that grows by
    (kappa/2) x x^T each round. Selection draws uniformly at random from the
    approximate Pareto front of the optimistic linear scores
    theta_hat_i . x + sqrt(gamma) ||x||_{Z^-1}; the link is never applied
    inside selection because the front only depends on the Pareto order and
    every link is monotone.
    """

    def __init__(
        self,
        dim: int,
        links,
        kappa: float,
        L: float,
        U: float,
        R: float,
        D: float = 1.0,
        delta: float = 0.1,
        gamma_mode: str = "theoretical",
        gamma_c: float = 0.1,
        lam: float | None = None,
    ):
        super().__init__(num_objectives=len(links))
        if gamma_mode not in ("theoretical", "tuned"):
            raise ValueError(f"gamma_mode must be 'theoretical' or 'tuned', got {gamma_mode!r}")
        if not 0.0 < delta < 1.0:
            raise ValueError(f"delta must lie in (0, 1), got {delta}")
        if kappa <= 0:
            raise ValueError(f"kappa must be positive, got {kappa}")
        self.dim = int(dim)
        self.links = tuple(links)
        self.kappa = float(kappa)
        self.L = float(L)
        self.U = float(U)
        self.R = float(R)
        self.D = float(D)
        self.delta = float(delta)
        self.gamma_mode = gamma_mode
        self.gamma_c = float(gamma_c)
        self.lam = float(lam) if lam is not None else max(1.0, self.kappa / 2.0)
        self.spd = SpdState(self.dim, self.lam)
        self.estimates = np.zeros((self.m, self.dim))
        self._front = None  # None until the first arm-set binding: O_1 = X

    def gamma(self, t: int) -> float:
        """Confidence width after t observed rounds (radius of C_{t+1})."""
        if self.gamma_mode == "tuned":
            g = self.gamma_c * self.spd.logdet_ratio
            return g if g > 0.0 else GAMMA_FLOOR
        ru2 = (self.R + self.U) ** 2
        return (
            (16.0 * ru2 / self.kappa) * np.log((self.m / self.delta) * np.sqrt(1.0 + 4.0 * self.D**2 * t))
            + self.lam * self.D**2
            + (2.0 * ru2 / self.kappa) * self.spd.logdet_ratio
            + self.kappa / 2.0
        )

    def ucb_matrix(self, arms, gamma: float) -> np.ndarray:
        """(K, m) optimistic scores theta_hat_i . x_k + sqrt(gamma) ||x_k||_{Z^-1}."""
        if gamma < 0:
            raise ValueError(f"gamma must be non-negative, got {gamma}")
        arms = np.asarray(arms, dtype=float)
        linear = arms @ self.estimates.T
        widths = np.sqrt(np.einsum("kd,de,ke->k", arms, self.spd.inverse, arms))
        return linear + np.sqrt(gamma) * widths[:, None]

    def select_arm(self, arms, t: int, rng: np.random.Generator) -> int:
        arms = self._begin_select(arms, t)
        if self._front is None:
            self._front = np.arange(arms.shape[0])
        self._pending = int(rng.choice(self._front))
        return self._pending

    def update(self, arm: int, reward) -> None:
        reward = self._begin_update(arm, reward)
        if np.any(np.abs(reward) > self.R + 1e-9):
            raise ValueError(f"reward outside [-R, R] with R = {self.R}: {reward}")
        x = self._arms[arm]
        self.spd.rank1_update(x, self.kappa / 2.0)
        for i in range(self.m):
            predicted = link_value(self.links[i], float(self.estimates[i] @ x))
            gradient = (predicted - reward[i]) * x
            newton_point = self.estimates[i] - self.spd.inverse @ gradient
            self.estimates[i] = self.spd.ball_project(newton_point, self.D)
        self._front = pareto_front(self.ucb_matrix(self._arms, self.gamma(self.spd.update_count)))
        self._check_logdet_bound()

    def _check_logdet_bound(self):
        # log det(Z_{t+1})/det(Z_1) <= d log(1 + kappa t / (2 lambda d));
        # small slack absorbs incremental floating-point drift.
        t = self.spd.update_count
        bound = self.dim * np.log1p(self.kappa * t / (2.0 * self.lam * self.dim))
        if self.spd.logdet_ratio > bound + 1e-9:
            raise RuntimeError(
                f"log-det ratio {self.spd.logdet_ratio!r} exceeds its theoretical bound {bound!r}"
            )

    def current_front(self):
        return self._front


def pucb_index(sums: np.ndarray, counts: np.ndarray, t: int) -> np.ndarray:
    """(K, m) Pareto-UCB index: per-objective empirical mean plus the
    sqrt(2 ln(t (m K)^{1/4}) / n_a) bonus. Requires every count >= 1.
    """
    K, m = sums.shape
    bonus = np.sqrt(2.0 * np.log(t * (m * K) ** 0.25) / counts)
    return sums / counts[:, None] + bonus[:, None]


class ParetoUcb(_BasePolicy):
    """Context-free Pareto UCB: each arm gets a per-objective UCB vector and
    the arm is drawn uniformly from the Pareto front of those vectors. Each
    arm is played once before the index applies.
    """

    def __init__(self, num_objectives: int):
        super().__init__(num_objectives)
        self.counts = None
        self.sums = None
        self._front = None

    def _ensure_stats(self, K: int):
        if self.counts is None:
            self.counts = np.zeros(K, dtype=int)
            self.sums = np.zeros((K, self.m))
            self._front = np.arange(K)

    def select_arm(self, arms, t: int, rng: np.random.Generator) -> int:
        arms = self._begin_select(arms, t)
        K = arms.shape[0]
        self._ensure_stats(K)
        unplayed = np.flatnonzero(self.counts == 0)
        if unplayed.size:
            self._front = np.arange(K)
            self._pending = int(unplayed[0])
        else:
            self._front = pareto_front(pucb_index(self.sums, self.counts, t))
            self._pending = int(rng.choice(self._front))
        return self._pending

    def update(self, arm: int, reward) -> None:
        reward = self._begin_update(arm, reward)
        self.counts[arm] += 1
        self.sums[arm] += reward

    def current_front(self):
        return self._front


class ScalarizedUcb(_BasePolicy):
    """Single-objective UCB1 on the weight-scalarized reward (equal weights
    by default). Keeps no front; ties on the index break uniformly at random.
    """

    def __init__(self, num_objectives: int, weights=None):
        super().__init__(num_objectives)
        if weights is None:
            weights = np.full(self.m, 1.0 / self.m)
        self.weights = np.asarray(weights, dtype=float)
        if self.weights.shape != (self.m,):
            raise ValueError(f"expected {self.m} weights, got shape {self.weights.shape}")
        if np.any(self.weights < 0):
            raise ValueError("weights must be non-negative")
        if abs(self.weights.sum() - 1.0) > 1e-9:
            raise ValueError(f"weights must sum to 1, got {self.weights.sum()!r}")
        self.counts = None
        self.scalar_sums = None

    def select_arm(self, arms, t: int, rng: np.random.Generator) -> int:
        arms = self._begin_select(arms, t)
        K = arms.shape[0]
        if self.counts is None:
            self.counts = np.zeros(K, dtype=int)
            self.scalar_sums = np.zeros(K)
        unplayed = np.flatnonzero(self.counts == 0)
        if unplayed.size:
            self._pending = int(unplayed[0])
        else:
            index = self.scalar_sums / self.counts + np.sqrt(2.0 * np.log(t) / self.counts)
            ties = np.flatnonzero(index == index.max())
            self._pending = int(rng.choice(ties))
        return self._pending

    def update(self, arm: int, reward) -> None:
        reward = self._begin_update(arm, reward)
        self.counts[arm] += 1
        self.scalar_sums[arm] += float(self.weights @ reward)

    def current_front(self):
        return None


class ParetoThompson(_BasePolicy):
    """Pareto Thompson sampling with independent Beta(1, 1) posteriors per
    arm and objective; rewards must be one-bit. Draws a full posterior sample
    matrix, takes its Pareto front, and picks uniformly from it.
    """

    def __init__(self, num_objectives: int):
        super().__init__(num_objectives)
        self.alpha = None
        self.beta = None
        self.counts = None
        self._front = None

    def sample_front(self, rng: np.random.Generator) -> np.ndarray:
        return pareto_front(rng.beta(self.alpha, self.beta))

    def select_arm(self, arms, t: int, rng: np.random.Generator) -> int:
        arms = self._begin_select(arms, t)
        K = arms.shape[0]
        if self.alpha is None:
            self.alpha = np.ones((K, self.m))
            self.beta = np.ones((K, self.m))
            self.counts = np.zeros(K, dtype=int)
            self._front = np.arange(K)
        unplayed = np.flatnonzero(self.counts == 0)
        if unplayed.size:
            self._front = np.arange(K)
            self._pending = int(unplayed[0])
        else:
            self._front = self.sample_front(rng)
            self._pending = int(rng.choice(self._front))
        return self._pending

    def update(self, arm: int, reward) -> None:
        reward = self._begin_update(arm, reward)
        if not np.all((reward == 0.0) | (reward == 1.0)):
            raise ValueError(f"Thompson sampling needs one-bit rewards, got {reward}")
        self.counts[arm] += 1
        self.alpha[arm] += reward
        self.beta[arm] += 1.0 - reward

    def current_front(self):
        return self._front
