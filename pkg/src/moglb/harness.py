"""Simulation harness: runs policies on problem instances for T rounds over
multiple trials with fully keyed seeding, records per-round metrics, and
aggregates means/stddevs at checkpoints.

Determinism contract: every random stream is derived from
(base_seed, algo_id, trial, substream), so results are identical regardless
of scheduling order or worker count. Records are sorted by (algo, trial, t)
before any aggregation or output.
"""

import concurrent.futures
from dataclasses import dataclass, asdict, replace
from typing import NamedTuple

import numpy as np

from .environment import ProblemInstance, generate_instance
from .glm import aggregate_bounds, sample_reward
from .pareto import jaccard
from .policies import MoglbUcb, ParetoThompson, ParetoUcb, ScalarizedUcb

CONFIG_FORMAT_VERSION = 1

ALGO_IDS = {"moglb": 0, "pucb": 1, "sucb": 2, "pts": 3}
ALGORITHMS = tuple(ALGO_IDS)

# Substream tags and the reserved pseudo-algo id for instance generation.
_STREAM_ENV = 0
_STREAM_POLICY = 1
_STREAM_INSTANCE = 2
_INSTANCE_NS = 9999

CSV_HEADER = "algo,trial,t,arm,instant_psg,cum_pareto_regret,front_size,jaccard"


class RoundRecord(NamedTuple):
    algo: str
    trial: int
    t: int
    arm: int
    instant_psg: float
    cum_pareto_regret: float
    front_size: int
    jaccard: float | None


class SummaryRow(NamedTuple):
    algo: str
    t: int
    regret_mean: float
    regret_std: float
    jaccard_mean: float | None
    jaccard_std: float | None


@dataclass
class ExperimentConfig:
    d: int = 10
    m: int = 5
    T: int = 3000
    trials: int = 10
    base_seed: int = 0
    algorithms: tuple = ALGORITHMS
    gamma_mode: str = "theoretical"
    gamma_c: float = 0.1
    delta: float = 0.1
    lam: float | None = None  # None: the max(1, kappa/2) rule
    instance_path: str | None = None  # pin one instance across trials
    jobs: int = 1

    def validate(self) -> "ExperimentConfig":
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.T < 1:
            raise ValueError(f"T must be >= 1, got {self.T}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not 0.0 < self.delta < 1.0:
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}")
        if not 1e-3 <= self.gamma_c <= 1.0:
            raise ValueError(f"gamma_c must lie in [1e-3, 1], got {self.gamma_c}")
        if self.gamma_mode not in ("theoretical", "tuned"):
            raise ValueError(f"gamma_mode must be 'theoretical' or 'tuned', got {self.gamma_mode!r}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
        if not self.algorithms:
            raise ValueError("algorithm roster is empty")
        unknown = [a for a in self.algorithms if a not in ALGO_IDS]
        if unknown:
            raise ValueError(f"unknown algorithms {unknown}; valid names: {sorted(ALGO_IDS)}")
        if self.lam is not None and self.lam <= 0:
            raise ValueError(f"lambda must be positive, got {self.lam}")
        return self

    def to_file_dict(self) -> dict:
        out = {"format_version": CONFIG_FORMAT_VERSION}
        out.update(asdict(self))
        out["algorithms"] = list(self.algorithms)
        return out

    @classmethod
    def from_file_dict(cls, payload: dict) -> "ExperimentConfig":
        payload = dict(payload)
        version = payload.pop("format_version", None)
        if version != CONFIG_FORMAT_VERSION:
            raise ValueError(f"unsupported config format_version {version}")
        known = set(cls.__dataclass_fields__)
        unknown = set(payload) - known
        if unknown:
            raise ValueError(f"unknown config keys {sorted(unknown)}")
        if "algorithms" in payload:
            payload["algorithms"] = tuple(payload["algorithms"])
        return cls(**payload)


def _stream(base_seed: int, ns: int, trial: int, sub: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((base_seed, ns, trial, sub)))


def instance_for_trial(config: ExperimentConfig, trial: int) -> ProblemInstance:
    """The trial's instance: loaded from the pinned path when set, otherwise
    generated from a stream keyed by (base_seed, trial) only, so every
    algorithm faces the same instance within a trial.
    """
    if config.instance_path is not None:
        return ProblemInstance.load(config.instance_path)
    rng = _stream(config.base_seed, _INSTANCE_NS, trial, _STREAM_INSTANCE)
    return generate_instance(config.d, config.m, rng, seed=config.base_seed)


def build_policy(algo: str, instance: ProblemInstance, config: ExperimentConfig):
    if algo == "moglb":
        kappa, L, U, R = aggregate_bounds(instance.objectives)
        return MoglbUcb(
            dim=instance.d,
            links=instance.links,
            kappa=kappa,
            L=L,
            U=U,
            R=R,
            D=instance.objectives[0].D,
            delta=config.delta,
            gamma_mode=config.gamma_mode,
            gamma_c=config.gamma_c,
            lam=config.lam,
        )
    if algo == "pucb":
        return ParetoUcb(instance.m)
    if algo == "sucb":
        return ScalarizedUcb(instance.m)
    if algo == "pts":
        return ParetoThompson(instance.m)
    raise ValueError(f"unknown algorithm {algo!r}; valid names: {sorted(ALGO_IDS)}")


def run_trial(
    instance: ProblemInstance,
    policy,
    T: int,
    base_seed: int,
    algo: str,
    trial: int,
) -> list[RoundRecord]:
    """One policy run of T rounds on one instance.

    Environment and policy randomness come from separate substreams keyed by
    (base_seed, algo, trial), so identical arguments reproduce the records
    bit for bit.
    """
    if T < 1:
        raise ValueError(f"horizon must be >= 1, got {T}")
    ns = ALGO_IDS[algo]
    env_rng = _stream(base_seed, ns, trial, _STREAM_ENV)
    policy_rng = _stream(base_seed, ns, trial, _STREAM_POLICY)

    arms = instance.arms
    true_front = instance.true_front
    records = []
    cum_regret = 0.0
    for t in range(1, T + 1):
        arm = policy.select_arm(arms, t, policy_rng)
        front = policy.current_front()
        if front is None:
            front_size, ji = 0, None
        else:
            front_size, ji = len(front), jaccard(front, true_front)
        reward = np.array([sample_reward(obj, arms[arm], env_rng) for obj in instance.objectives])
        policy.update(arm, reward)
        gap = float(instance.psg_table[arm])
        cum_regret += gap
        records.append(RoundRecord(algo, trial, t, arm, gap, cum_regret, front_size, ji))
    return records


def _run_job(config: ExperimentConfig, algo: str, trial: int) -> list[RoundRecord]:
    instance = instance_for_trial(config, trial)
    policy = build_policy(algo, instance, config)
    return run_trial(instance, policy, config.T, config.base_seed, algo, trial)


def run_experiment(config: ExperimentConfig):
    """All (algorithm, trial) runs of the config, as sorted RoundRecords plus
    checkpoint summary rows. Output is identical at any worker count.
    """
    config.validate()
    jobs = [(algo, trial) for algo in config.algorithms for trial in range(config.trials)]
    results = []
    if config.jobs == 1 or len(jobs) == 1:
        for algo, trial in jobs:
            results.append(_wrapped_job(config, algo, trial))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [pool.submit(_wrapped_job, config, algo, trial) for algo, trial in jobs]
            results = [f.result() for f in futures]
    records = [record for batch in results for record in batch]
    records.sort(key=lambda r: (r.algo, r.trial, r.t))
    return records, compute_summary(records, config)


def _wrapped_job(config: ExperimentConfig, algo: str, trial: int) -> list[RoundRecord]:
    try:
        return _run_job(config, algo, trial)
    except Exception as exc:
        raise RuntimeError(
            f"trial failed: algo={algo} trial={trial} base_seed={config.base_seed}: {exc}"
        ) from exc


def checkpoints_for(T: int) -> list[int]:
    return sorted({max(1, round(0.1 * T)), max(1, round(0.5 * T)), T})


def compute_summary(records: list[RoundRecord], config: ExperimentConfig) -> list[SummaryRow]:
    """Mean and population stddev of cumulative regret and Jaccard index at
    the 10%/50%/100% checkpoints, across trials in trial order.
    """
    marks = set(checkpoints_for(config.T))
    by_algo = {}
    for rec in records:
        if rec.t in marks:
            by_algo.setdefault(rec.algo, {}).setdefault(rec.t, []).append(rec)
    rows = []
    for algo in sorted(by_algo):
        for t in sorted(by_algo[algo]):
            checkpoint_records = sorted(by_algo[algo][t], key=lambda r: r.trial)
            regrets = np.array([r.cum_pareto_regret for r in checkpoint_records])
            jaccards = [r.jaccard for r in checkpoint_records]
            if any(j is None for j in jaccards):
                j_mean = j_std = None
            else:
                j_arr = np.array(jaccards)
                j_mean, j_std = float(j_arr.mean()), float(j_arr.std())
            rows.append(
                SummaryRow(algo, t, float(regrets.mean()), float(regrets.std()), j_mean, j_std)
            )
    return rows


def _fmt(value) -> str:
    return "" if value is None else f"{value:.9g}"


def records_to_csv(records: list[RoundRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            f"{r.algo},{r.trial},{r.t},{r.arm},{_fmt(r.instant_psg)},"
            f"{_fmt(r.cum_pareto_regret)},{r.front_size},{_fmt(r.jaccard)}"
        )
    return "\n".join(lines) + "\n"


def write_records_csv(records: list[RoundRecord], path) -> None:
    with open(path, "w") as fh:
        fh.write(records_to_csv(records))


def summary_to_text(rows: list[SummaryRow], config: ExperimentConfig) -> str:
    lines = [
        f"# experiment summary (format_version {CONFIG_FORMAT_VERSION})",
        (
            f"# d={config.d} m={config.m} T={config.T} trials={config.trials} "
            f"seed={config.base_seed} gamma_mode={config.gamma_mode} gamma_c={_fmt(config.gamma_c)} "
            f"delta={_fmt(config.delta)}"
        ),
    ]
    for row in rows:
        line = (
            f"algo={row.algo} t={row.t} regret_mean={_fmt(row.regret_mean)} "
            f"regret_std={_fmt(row.regret_std)}"
        )
        if row.jaccard_mean is not None:
            line += f" jaccard_mean={_fmt(row.jaccard_mean)} jaccard_std={_fmt(row.jaccard_std)}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def tune_gamma(config: ExperimentConfig, c_grid) -> tuple[float, list[tuple[float, float]]]:
    """Grid-search the tuned-mode width multiplier: runs the MOGLB experiment
    once per c and reports (best_c, [(c, mean final Pareto regret), ...]).

    Grid values are deduplicated and sorted; ties on regret go to the
    smallest c.
    """
    grid = sorted(set(float(c) for c in c_grid))
    if not grid:
        raise ValueError("empty gamma grid")
    out_of_range = [c for c in grid if not 1e-3 <= c <= 1.0]
    if out_of_range:
        raise ValueError(f"grid values outside [1e-3, 1]: {out_of_range}")
    table = []
    for c in grid:
        sub = replace(config, algorithms=("moglb",), gamma_mode="tuned", gamma_c=c)
        records, _ = run_experiment(sub)
        finals = [r.cum_pareto_regret for r in records if r.t == sub.T]
        table.append((c, float(np.mean(finals))))
    best_c = min(table, key=lambda row: (row[1], row[0]))[0]
    return best_c, table
