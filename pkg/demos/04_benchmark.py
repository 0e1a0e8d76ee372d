"""Desk-scale benchmark of all four policies through the harness, with the
checkpoint summary printed. Scaling T and trials up to 3000/10 (and d to 10)
reproduces the full comparison; this version runs in a few seconds.
"""

from moglb import ExperimentConfig, run_experiment
from moglb.harness import summary_to_text

config = ExperimentConfig(
    d=5, m=5, T=600, trials=4, base_seed=35,
    gamma_mode="tuned", gamma_c=0.01,
)
records, summary = run_experiment(config)

print(f"{len(records)} round records\n")
print(summary_to_text(summary, config))

final = {row.algo: row for row in summary if row.t == config.T}
best = min(final, key=lambda a: final[a].regret_mean)
print(f"lowest mean Pareto regret at T={config.T}: {best} "
      f"({final[best].regret_mean:.1f})")
