# Sweep (alpha, theta) at N=1024 and see where a non-pi phase pays off.

import numpy as np

from grover_phase.experiments import SweepSpec, sweep

spec = SweepSpec(1024, 25, 24)
rows = list(sweep(spec))
gain = np.array([r.improvement for r in rows]).reshape(spec.alpha_points, spec.theta_points)
dev = np.array([abs(r.rough_deviation) for r in rows])

print("grid", gain.shape, "max gain", gain.max(), "min gain", gain.min())
i, j = np.unravel_index(gain.argmax(), gain.shape)
print("best cell alpha=%.4f theta=%.4f" % (spec.alphas()[i], spec.thetas()[j]))

# average gain per theta column; it is zero at theta = 0 and largest near |theta| = pi
for t, g in zip(spec.thetas(), gain.mean(axis=0)):
    print(f"theta={t:+.3f}  mean gain={g:.5f}")

print("rough rule pi - theta: median |phi_opt - rough| =", np.median(dev), "max =", dev.max())
