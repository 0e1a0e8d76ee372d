"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
The two experiment-scale criteria share one tuned benchmark run (module
fixture); the containment and log-det criteria share one batch of simulated
runs.
"""

import time

import numpy as np
import pytest

from moglb.environment import generate_instance
from moglb.glm import aggregate_bounds, sample_reward
from moglb.harness import ExperimentConfig, records_to_csv, run_experiment, tune_gamma
from moglb.linalg import SpdState
from moglb.pareto import dominates, not_dominated, pareto_front, psg
from moglb.policies import MoglbUcb

KAPPA_LOGIT_1 = 0.19661193324148185


def report(num, name, passed, detail):
    print(f"\nCRITERION {num} [{name}]: {'PASS' if passed else 'FAIL'} ({detail})")
    assert passed, f"criterion {num} ({name}): {detail}"


# --------------------------------------------------------------------------
# Independent oracles
# --------------------------------------------------------------------------

def brute_force_front(values):
    K = values.shape[0]
    return np.array(
        [k for k in range(K) if not any(dominates(values[j], values[k]) for j in range(K))],
        dtype=int,
    )


def psg_by_bisection(values, arm, tol=1e-12):
    """Bisect on the uniform boost, deciding each candidate epsilon purely by
    the dominance definition over all rows."""

    def non_dominated_everywhere(eps):
        shifted = values[arm] + eps
        ge_all = (values >= shifted).all(axis=1)
        gt_any = (values > shifted).any(axis=1)
        return not np.any(ge_all & gt_any)

    if non_dominated_everywhere(0.0):
        return 0.0
    lo, hi = 0.0, float((values - values[arm]).max()) + 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if non_dominated_everywhere(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


# --------------------------------------------------------------------------
# Shared simulation batches
# --------------------------------------------------------------------------

@pytest.fixture(scope="module")
def containment_batch():
    """100 independent runs (logit, d=3, K=12, m=2, T=500, theoretical gamma,
    delta=0.1) recording confidence containment and log-det bound violations.
    """
    runs_contained = 0
    logdet_violations = 0
    t0 = time.perf_counter()
    for run in range(100):
        inst = generate_instance(
            3, 2, np.random.default_rng(np.random.SeedSequence((2024, run))),
            links=["logit", "logit"], seed=run,
        )
        kappa, L, U, R = aggregate_bounds(inst.objectives)
        pol = MoglbUcb(dim=3, links=inst.links, kappa=kappa, L=L, U=U, R=R,
                       D=1.0, delta=0.1, gamma_mode="theoretical")
        env = np.random.default_rng(np.random.SeedSequence((2024, run, 0)))
        sel = np.random.default_rng(np.random.SeedSequence((2024, run, 1)))
        thetas = np.array([o.theta for o in inst.objectives])
        contained = True
        for t in range(1, 501):
            arm = pol.select_arm(inst.arms, t, sel)
            y = np.array([sample_reward(o, inst.arms[arm], env) for o in inst.objectives])
            pol.update(arm, y)
            gamma_t = pol.gamma(t)
            for i in range(2):
                if pol.spd.mahalanobis_sq(thetas[i] - pol.estimates[i]) > gamma_t:
                    contained = False
            bound = 3 * np.log1p(kappa * t / (2.0 * pol.lam * 3))
            if pol.spd.logdet_ratio > bound:
                logdet_violations += 1
        runs_contained += contained
    elapsed = time.perf_counter() - t0
    return runs_contained, logdet_violations, elapsed


@pytest.fixture(scope="module")
def benchmark_experiment(tmp_path_factory):
    """The figure-scale benchmark: one pinned instance (d=10, m=5), the gamma
    multiplier grid-searched on final Pareto regret, then the 4-algorithm
    experiment at the selected c. T=3000, 10 trials.
    """
    path = tmp_path_factory.mktemp("acceptance") / "instance.json"
    generate_instance(10, 5, np.random.default_rng(35), seed=35).save(path)
    base = ExperimentConfig(
        d=10, m=5, T=3000, trials=10, base_seed=7,
        gamma_mode="tuned", instance_path=str(path),
    )
    t0 = time.perf_counter()
    best_c, table = tune_gamma(base, [0.001, 0.01, 0.1, 1.0])
    tuned = ExperimentConfig(
        d=10, m=5, T=3000, trials=10, base_seed=7,
        gamma_mode="tuned", gamma_c=best_c, instance_path=str(path),
    )
    records, summary = run_experiment(tuned)
    elapsed = time.perf_counter() - t0
    return best_c, table, records, summary, elapsed


def summary_value(summary, algo, t, field):
    for row in summary:
        if row.algo == algo and row.t == t:
            return getattr(row, field)
    raise KeyError((algo, t, field))


# --------------------------------------------------------------------------
# Criteria
# --------------------------------------------------------------------------

def test_criterion_1_pareto_front_oracle():
    rng = np.random.default_rng(101)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(1000):
        K = int(rng.integers(1, 51))
        m = int(rng.integers(1, 6))
        values = rng.standard_normal((K, m))
        if not np.array_equal(pareto_front(values), brute_force_front(values)):
            mismatches += 1
    elapsed = time.perf_counter() - t0
    report(
        1, "pareto front oracle equivalence",
        mismatches == 0 and elapsed < 10.0,
        f"{mismatches} mismatches over 1000 instances, {elapsed:.1f} s",
    )


def test_criterion_2_psg_oracle():
    rng = np.random.default_rng(202)
    worst = 0.0
    equivalence_failures = 0
    for _ in range(1000):
        K = int(rng.integers(1, 51))
        m = int(rng.integers(1, 6))
        values = rng.random((K, m))
        arm = int(rng.integers(0, K))
        worst = max(worst, abs(psg(values, arm) - psg_by_bisection(values, arm)))
        front = set(pareto_front(values).tolist())
        for k in range(K):
            if (psg(values, k) == 0.0) != (k in front):
                equivalence_failures += 1
    report(
        2, "psg oracle equivalence",
        worst <= 1e-9 and equivalence_failures == 0,
        f"max |closed form - bisection| = {worst:.2e}, zero-iff-front failures = {equivalence_failures}",
    )


def test_criterion_3_confidence_containment(containment_batch):
    runs_contained, _, elapsed = containment_batch
    report(
        3, "confidence containment",
        runs_contained >= 90 and elapsed < 120.0,
        f"{runs_contained}/100 runs fully contained, {elapsed:.1f} s",
    )


def test_criterion_4_logdet_bound(containment_batch):
    _, logdet_violations, _ = containment_batch
    report(
        4, "log-det ratio bound",
        logdet_violations == 0,
        f"{logdet_violations} violations over 100 runs x 500 rounds",
    )


def test_criterion_5_regret_ordering_and_sublinearity(benchmark_experiment):
    best_c, table, records, summary, elapsed = benchmark_experiment
    moglb_final = summary_value(summary, "moglb", 3000, "regret_mean")
    baselines = {a: summary_value(summary, a, 3000, "regret_mean") for a in ("pucb", "sucb", "pts")}
    moglb_early = summary_value(summary, "moglb", 300, "regret_mean")
    beats_all = all(moglb_final < v for v in baselines.values())
    sublinear = moglb_final / 3000 < 0.5 * moglb_early / 300
    report(
        5, "regret below baselines + sublinear",
        beats_all and sublinear and elapsed < 300.0,
        f"c*={best_c}, moglb {moglb_final:.1f} vs " +
        ", ".join(f"{a} {v:.1f}" for a, v in baselines.items()) +
        f"; PR(3000)/3000 = {moglb_final / 3000:.4f} < 0.5*PR(300)/300 = {0.5 * moglb_early / 300:.4f}; "
        f"{elapsed:.0f} s",
    )


def test_criterion_6_jaccard_levels(benchmark_experiment):
    _, _, _, summary, _ = benchmark_experiment
    ji_final = summary_value(summary, "moglb", 3000, "jaccard_mean")
    dominates_baselines = all(
        summary_value(summary, "moglb", t, "jaccard_mean")
        >= summary_value(summary, algo, t, "jaccard_mean")
        for t in (300, 1500, 3000)
        for algo in ("pucb", "pts")
    )
    report(
        6, "jaccard index levels",
        ji_final >= 0.9 and dominates_baselines,
        f"moglb JI(3000) = {ji_final:.3f}; >= pucb/pts at all checkpoints: {dominates_baselines}",
    )


def test_criterion_7_linear_algebra_accuracy():
    rng = np.random.default_rng(303)
    state = SpdState(10, 1.0)
    worst_identity = 0.0
    worst_logdet = 0.0
    eye = np.eye(10)
    for _ in range(3000):
        x = rng.standard_normal(10)
        x /= max(1.0, np.linalg.norm(x))
        state.rank1_update(x, KAPPA_LOGIT_1 / 2.0)
        worst_identity = max(worst_identity, float(np.abs(state.matrix @ state.inverse - eye).max()))
        direct = float(np.linalg.slogdet(state.matrix)[1])
        worst_logdet = max(worst_logdet, abs(state.logdet_ratio - direct))
    report(
        7, "inverse and log-det accuracy",
        worst_identity < 1e-8 and worst_logdet < 1e-8,
        f"max |Z Zinv - I| = {worst_identity:.2e}, max log-det drift = {worst_logdet:.2e} "
        f"across all 3000 updates",
    )


def test_criterion_8_projection_oracle():
    rng = np.random.default_rng(404)
    angles = np.arange(0.0, 2 * np.pi, 1e-4)
    circle = np.column_stack([np.cos(angles), np.sin(angles)])
    worst_gap = -np.inf
    worst_norm = 0.0
    for _ in range(500):
        state = SpdState(2, float(rng.uniform(0.5, 2.0)))
        for _ in range(int(rng.integers(0, 6))):
            state.rank1_update(rng.standard_normal(2) * 0.7, float(rng.uniform(0.0, 1.0)))
        point = rng.standard_normal(2) * 2.0
        y = state.ball_project(point, 1.0)
        worst_norm = max(worst_norm, float(np.linalg.norm(y)))
        d = y - point
        achieved = float(d @ state.matrix @ d)
        if np.linalg.norm(point) <= 1.0:
            oracle = 0.0  # interior: the point itself is feasible
        else:
            diffs = circle - point
            oracle = float(np.einsum("ij,jk,ik->i", diffs, state.matrix, diffs).min())
        worst_gap = max(worst_gap, achieved - oracle)
    report(
        8, "projection matches grid oracle",
        worst_gap <= 1e-6 and worst_norm <= 1.0 + 1e-9,
        f"max objective excess = {worst_gap:.2e}, max output norm = {worst_norm:.12f}",
    )


def test_criterion_9_determinism():
    def config(**kw):
        base = dict(d=3, m=2, T=50, trials=2, base_seed=13, gamma_mode="tuned", gamma_c=0.05)
        base.update(kw)
        return ExperimentConfig(**base)

    r1, _ = run_experiment(config())
    r2, _ = run_experiment(config())
    r_par, _ = run_experiment(config(jobs=2))
    r_perm, _ = run_experiment(config(algorithms=("pts", "sucb", "pucb", "moglb")))
    identical_rerun = records_to_csv(r1) == records_to_csv(r2)
    identical_parallel = records_to_csv(r1) == records_to_csv(r_par)
    identical_permuted = r1 == r_perm
    report(
        9, "determinism",
        identical_rerun and identical_parallel and identical_permuted,
        f"rerun byte-identical: {identical_rerun}, jobs=2 byte-identical: {identical_parallel}, "
        f"roster permutation invariant: {identical_permuted}",
    )
