"""The three link functions and their analytic constants on [-D, D]:
slope floor kappa, Lipschitz constant L, value bound U, reward bound R.
"""

import numpy as np

from moglb import derive_bounds, link_value

print("link values at a few points:")
for kind in ("identity", "logit", "probit"):
    vals = [float(link_value(kind, z)) for z in (-2.0, 0.0, 1.0)]
    print(f"  {kind:9s} mu(-2)={vals[0]:+.4f}  mu(0)={vals[1]:+.4f}  mu(1)={vals[2]:+.4f}")

print("\nderived constants:")
print(f"  {'link':9s} {'D':>4s} {'kappa':>9s} {'L':>9s} {'U':>9s} {'R':>5s}")
for kind in ("logit", "probit", "identity"):
    for D in (0.5, 1.0, 2.0):
        kappa, L, U, R = derive_bounds(kind, D)
        print(f"  {kind:9s} {D:4.1f} {kappa:9.5f} {L:9.5f} {U:9.5f} {R:5.2f}")

# the slope floor tightens as the domain widens: exploration needs more care
# for confident coefficients far from the origin
print("\nkappa decay for the logit link:")
for D in (0.5, 1.0, 2.0, 4.0):
    kappa = derive_bounds("logit", D)[0]
    print(f"  D={D:3.1f}: kappa={kappa:.5f}")

z = np.linspace(-1, 1, 5)
print("\nvectorized probit values on a grid:", np.round(link_value("probit", z), 4))
