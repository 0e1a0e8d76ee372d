"""Instance files: generate a synthetic problem, serialize it, reload it,
and confirm the reload is exact.
"""

import tempfile
from pathlib import Path

import numpy as np

from moglb import ProblemInstance, generate_instance

rng = np.random.default_rng(7)
instance = generate_instance(5, 5, rng, seed=7)
print(f"generated: K={instance.K}, d={instance.d}, links={instance.links}")
print(f"true front: {instance.true_front.tolist()}")
print(f"inner arm norms <= 0.5: {np.linalg.norm(instance.arms[:15], axis=1).max():.3f}")

path = Path(tempfile.mkdtemp()) / "instance.json"
instance.save(path)
print(f"\nwritten to {path} ({path.stat().st_size} bytes)")
print("first lines of the file:")
for line in path.read_text().splitlines()[:6]:
    print(" ", line)

reloaded = ProblemInstance.load(path)
print("\nround trip exact:", reloaded.to_json() == instance.to_json())
print("psg table reproduced:", np.array_equal(reloaded.psg_table, instance.psg_table))

again = generate_instance(5, 5, np.random.default_rng(7), seed=7)
print("same seed regenerates identical instance:", again.to_json() == instance.to_json())
