"""Pareto order, fronts, suboptimality gaps, and the Jaccard index on a
hand-sized reward matrix.
"""

import numpy as np

from moglb import dominates, jaccard, not_dominated, pareto_front, psg

rewards = np.array(
    [
        [1.0, 0.0],   # best on objective 0
        [0.0, 1.0],   # best on objective 1
        [0.5, 0.5],   # balanced, incomparable with both
        [0.2, 0.2],   # dominated by the balanced arm
        [0.5, 0.5],   # duplicate of the balanced arm
    ]
)

print("reward matrix:")
print(rewards)

print("\n(1,0) dominates (0.2,0.2):", dominates(rewards[0], rewards[3]))
print("(1,0) vs (0,1) incomparable:",
      not_dominated(rewards[0], rewards[1]) and not_dominated(rewards[1], rewards[0]))
print("equal rows never dominate each other:", not dominates(rewards[2], rewards[4]))

front = pareto_front(rewards)
print("\nPareto front:", front.tolist(), " (duplicates co-exist)")

print("\nper-arm suboptimality gap:")
for k in range(rewards.shape[0]):
    print(f"  arm {k}: {psg(rewards, k):.3f}")

estimated = np.array([0, 1, 2])
print("\nJaccard(front, estimate {0,1,2}):", jaccard(front, estimated))
