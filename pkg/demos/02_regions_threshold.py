# Real amplitude vectors: where does phi = pi stop being best?
import math

import numpy as np

from grover_phase import classify_region, optimal_phase_real, region_boundaries, threshold_probability
from grover_phase.experiments import threshold_table

n = 16
low, high = region_boundaries(n)
print("N=16 boundaries", low, high)
print("P_r(16) =", threshold_probability(n), " sin^2(low) =", math.sin(low) ** 2)

for alpha in np.linspace(0.1, math.pi / 2 - 0.05, 12):
    rep = classify_region(n, alpha)
    res = optimal_phase_real(n, alpha)
    print(f"alpha={alpha:.4f}  {rep.region}  phi={rep.phi_opt:.6f}  P={res.p_opt:.6f}  gain over pi={res.improvement:.2e}")

# N*(1 - P_r) heads to 1 as N grows
for row in threshold_table([5, 6, 16, 1024, 2**16, 2**20]):
    print(row.n, row.p_threshold, row.n_times_complement)
