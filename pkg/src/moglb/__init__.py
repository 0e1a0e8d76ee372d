"""Multi-objective generalized linear bandits: policies, synthetic
environments, and a reproducible benchmark harness.
"""

from .environment import GenerationError, ProblemInstance, generate_instance, sample_coefficients
from .glm import GlmObjective, aggregate_bounds, derive_bounds, link_value, sample_reward
from .harness import (
    ExperimentConfig,
    RoundRecord,
    SummaryRow,
    run_experiment,
    run_trial,
    tune_gamma,
)
from .linalg import ProjectionError, SpdState
from .pareto import dominates, jaccard, not_dominated, pareto_front, psg
from .policies import MoglbUcb, ParetoThompson, ParetoUcb, ScalarizedUcb

__version__ = "0.1.0"

__all__ = [
    "ExperimentConfig",
    "GenerationError",
    "GlmObjective",
    "MoglbUcb",
    "ParetoThompson",
    "ParetoUcb",
    "ProblemInstance",
    "ProjectionError",
    "RoundRecord",
    "ScalarizedUcb",
    "SpdState",
    "SummaryRow",
    "aggregate_bounds",
    "derive_bounds",
    "dominates",
    "generate_instance",
    "jaccard",
    "link_value",
    "not_dominated",
    "pareto_front",
    "psg",
    "run_experiment",
    "run_trial",
    "sample_coefficients",
    "sample_reward",
    "tune_gamma",
]
