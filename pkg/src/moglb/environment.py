"""Synthetic problem instances: arm sets drawn from centered balls,
positive-orthant coefficient vectors, mixed probit/logit objectives, and the
precomputed ground truth (expected rewards, true Pareto front, per-arm gap
table). Instances serialize to a self-describing JSON file.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from .glm import GlmObjective, link_value
from .pareto import pareto_front, psg

FORMAT_VERSION = 1


class GenerationError(RuntimeError):
    """Arm-set rejection sampling exhausted its attempt budget."""

    def __init__(self, max_attempts: int, smallest_front: int, target: int):
        super().__init__(
            f"no arm set with front size <= {target} in {max_attempts} attempts "
            f"(smallest front seen: {smallest_front})"
        )
        self.smallest_front = smallest_front


def sample_in_ball(d: int, radius: float, rng: np.random.Generator, n: int = 1) -> np.ndarray:
    """n points uniform in the centered d-ball of the given radius, as (n, d).

    Isotropic direction from a normalized Gaussian, radius u^(1/d) for the
    correct volume law.
    """
    directions = rng.standard_normal((n, d))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    radii = radius * rng.random(n) ** (1.0 / d)
    return directions * radii[:, None]


def sample_coefficients(d: int, rng: np.random.Generator) -> np.ndarray:
    """One coefficient vector uniform on the positive-orthant part of the
    unit ball: a uniform-ball draw reflected componentwise into the
    non-negative orthant.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    return np.abs(sample_in_ball(d, 1.0, rng, n=1)[0])


def default_links(m: int) -> list[str]:
    """The experiment's link assignment: two probit + three logit at m = 5,
    otherwise alternating probit/logit starting with probit.
    """
    if m < 1:
        raise ValueError(f"need at least one objective, got {m}")
    if m == 5:
        return ["probit", "probit", "logit", "logit", "logit"]
    return ["probit" if i % 2 == 0 else "logit" for i in range(m)]


@dataclass
class ProblemInstance:
    """A fixed arm set with its per-objective reward models and ground truth."""

    arms: np.ndarray
    objectives: list[GlmObjective]
    seed: int | None = None
    expected_rewards: np.ndarray = field(init=False)
    true_front: np.ndarray = field(init=False)
    psg_table: np.ndarray = field(init=False)

    def __post_init__(self):
        self.arms = np.asarray(self.arms, dtype=float)
        if self.arms.ndim != 2 or self.arms.shape[0] < 1:
            raise ValueError(f"expected a (K, d) arm matrix, got shape {self.arms.shape}")
        norms = np.linalg.norm(self.arms, axis=1)
        if np.any(norms > 1.0 + 1e-9):
            raise ValueError(f"arm norms must be <= 1, max is {norms.max():.6g}")
        for obj in self.objectives:
            if obj.dim != self.d:
                raise ValueError(f"objective dimension {obj.dim} does not match arms ({self.d})")
        self.expected_rewards = np.column_stack(
            [np.asarray(link_value(o.link, self.arms @ o.theta), dtype=float) for o in self.objectives]
        )
        self.true_front = pareto_front(self.expected_rewards)
        self.psg_table = np.array([psg(self.expected_rewards, k) for k in range(self.K)])

    @property
    def K(self) -> int:
        return self.arms.shape[0]

    @property
    def d(self) -> int:
        return self.arms.shape[1]

    @property
    def m(self) -> int:
        return len(self.objectives)

    @property
    def links(self) -> list[str]:
        return [o.link for o in self.objectives]

    def to_json(self) -> str:
        payload = {
            "format_version": FORMAT_VERSION,
            "kind": "moglb-instance",
            "seed": self.seed,
            "d": self.d,
            "m": self.m,
            "links": self.links,
            "D": self.objectives[0].D,
            "noise": self.objectives[0].noise,
            "thetas": [o.theta.tolist() for o in self.objectives],
            "arms": self.arms.tolist(),
        }
        return json.dumps(payload, indent=2)

    def save(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_json())
            fh.write("\n")

    @classmethod
    def from_json(cls, text: str) -> "ProblemInstance":
        payload = json.loads(text)
        if payload.get("kind") != "moglb-instance":
            raise ValueError("not an instance file")
        if payload.get("format_version") != FORMAT_VERSION:
            raise ValueError(f"unsupported format_version {payload.get('format_version')}")
        objectives = [
            GlmObjective(link, np.asarray(theta, dtype=float), D=payload["D"], noise=payload["noise"])
            for link, theta in zip(payload["links"], payload["thetas"], strict=True)
        ]
        return cls(np.asarray(payload["arms"], dtype=float), objectives, seed=payload["seed"])

    @classmethod
    def load(cls, path) -> "ProblemInstance":
        with open(path) as fh:
            return cls.from_json(fh.read())


def generate_instance(
    d: int,
    m: int,
    rng: np.random.Generator,
    max_attempts: int = 1000,
    links: list[str] | None = None,
    seed: int | None = None,
) -> ProblemInstance:
    """Draw one synthetic instance: 4d arms (3d from the radius-0.5 ball,
    then d from the unit ball), resampling the whole arm set until the true
    Pareto front has at most d arms. Coefficients are drawn once per
    objective and held fixed across retries.

    Args:
        d: context dimension, >= 2.
        m: number of objectives.
        rng: source of randomness.
        max_attempts: arm-set retries before giving up.
        links: optional explicit link assignment (default: the standard
            probit/logit mix from default_links).
        seed: recorded in the instance metadata for provenance only.

    Raises:
        GenerationError: if no attempt produced a small enough front.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if max_attempts < 1:
        raise ValueError(f"max_attempts must be >= 1, got {max_attempts}")
    links = default_links(m) if links is None else list(links)
    if len(links) != m:
        raise ValueError(f"expected {m} links, got {len(links)}")
    objectives = [GlmObjective(link, sample_coefficients(d, rng), D=1.0) for link in links]

    smallest = None
    for _ in range(max_attempts):
        inner = sample_in_ball(d, 0.5, rng, n=3 * d)
        outer = sample_in_ball(d, 1.0, rng, n=d)
        arms = np.vstack([inner, outer])
        instance = ProblemInstance(arms, objectives, seed=seed)
        front_size = instance.true_front.size
        if front_size <= d:
            return instance
        smallest = front_size if smallest is None else min(smallest, front_size)
    raise GenerationError(max_attempts, smallest, d)
