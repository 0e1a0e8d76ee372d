"""Link functions (identity, logit, probit), their analytic slope/value
bounds on [-D, D], and stochastic reward sampling for per-objective GLMs.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import expit, ndtr

LINK_KINDS = ("identity", "logit", "probit")

# Default half-width of the uniform noise added to identity-link rewards.
IDENTITY_NOISE = 0.1

_INV_SQRT_2PI = 1.0 / np.sqrt(2.0 * np.pi)


def _check_kind(kind: str) -> None:
    if kind not in LINK_KINDS:
        raise ValueError(f"unknown link kind {kind!r}; expected one of {LINK_KINDS}")


def link_value(kind: str, z):
    """Evaluate the link function: z, sigmoid(z), or the standard normal CDF.

    Accepts scalars or arrays; probit goes through the error-function-based
    CDF, accurate to well below 1e-12 absolute.
    """
    _check_kind(kind)
    if kind == "identity":
        return z
    if kind == "logit":
        return expit(z)
    return ndtr(z)


def derive_bounds(kind: str, D: float, noise: float = IDENTITY_NOISE):
    """Analytic (kappa, L, U, R) for a link on [-D, D].

    kappa is the minimum slope, L the maximum slope (Lipschitz constant),
    U the maximum |link value|, R the almost-sure reward bound. The logit
    and probit slopes are symmetric and peak at 0, so the extremes sit at
    z = 0 and z = +-D.

    Args:
        kind: link kind.
        D: coefficient-norm bound, finite and positive.
        noise: identity-link uniform noise half-width (sets R; binary links
            ignore it since one-bit rewards are bounded by 1).
    """
    _check_kind(kind)
    if not (np.isfinite(D) and D > 0):
        raise ValueError(f"D must be finite and positive, got {D}")
    if kind == "identity":
        return 1.0, 1.0, float(D), float(D + noise)
    if kind == "logit":
        s = float(expit(D))
        return s * (1.0 - s), 0.25, s, 1.0
    # probit: slope is the standard normal density
    kappa = float(_INV_SQRT_2PI * np.exp(-0.5 * D * D))
    return kappa, float(_INV_SQRT_2PI), float(ndtr(D)), 1.0


@dataclass
class GlmObjective:
    """One objective's reward model: a link kind, true coefficients, and the
    derived constants (kappa, L, U, R) on [-D, D].
    """

    link: str
    theta: np.ndarray
    D: float = 1.0
    noise: float = IDENTITY_NOISE
    kappa: float = field(init=False)
    L: float = field(init=False)
    U: float = field(init=False)
    R: float = field(init=False)

    def __post_init__(self):
        _check_kind(self.link)
        self.theta = np.asarray(self.theta, dtype=float)
        if self.theta.ndim != 1:
            raise ValueError("theta must be a 1-d coefficient vector")
        if np.linalg.norm(self.theta) > self.D + 1e-9:
            raise ValueError(
                f"||theta|| = {np.linalg.norm(self.theta):.6g} exceeds the bound D = {self.D}"
            )
        self.kappa, self.L, self.U, self.R = derive_bounds(self.link, self.D, self.noise)

    @property
    def dim(self) -> int:
        return self.theta.shape[0]

    def mean_reward(self, x) -> float:
        """Expected reward link(theta . x) for a context x."""
        return float(link_value(self.link, float(self.theta @ np.asarray(x, dtype=float))))


def sample_reward(objective: GlmObjective, x, rng: np.random.Generator) -> float:
    """Draw one stochastic reward for an arm under this objective.

    Binary links draw y in {0, 1} with P(y=1) = link(theta . x); the identity
    link returns theta . x plus uniform noise on [-noise, noise]. Either way
    the conditional mean is link(theta . x).
    """
    x = np.asarray(x, dtype=float)
    if np.linalg.norm(x) > 1.0 + 1e-9:
        raise ValueError(f"arm norm {np.linalg.norm(x):.6g} exceeds 1")
    z = float(objective.theta @ x)
    if objective.link == "identity":
        return z + float(rng.uniform(-objective.noise, objective.noise))
    p = float(link_value(objective.link, z))
    return 1.0 if rng.random() < p else 0.0


def aggregate_bounds(objectives):
    """Pool per-objective constants into the single (kappa, L, U, R) the
    learner uses: the slope lower bound must hold for every objective, so
    kappa is the min; the remaining bounds are maxima.
    """
    if not objectives:
        raise ValueError("need at least one objective")
    kappa = min(o.kappa for o in objectives)
    L = max(o.L for o in objectives)
    U = max(o.U for o in objectives)
    R = max(o.R for o in objectives)
    return kappa, L, U, R
