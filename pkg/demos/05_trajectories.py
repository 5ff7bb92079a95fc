# Step from the uniform state under each strategy.
import math

from grover_phase import threshold_probability
from grover_phase.experiments import trajectory

n = 1024
steps = 30
runs = {s: list(trajectory(n, s, steps)) for s in ("classical", "optimal", "rough", "fixed:2.5")}
print("P_r =", threshold_probability(n), " classical stop =", math.floor(math.pi / 4 * math.sqrt(n)))

print("step " + "".join(f"{s:>14s}" for s in runs))
for k in range(steps + 1):
    cells = [f"{r[k].p_target:14.9f}" if k < len(r) else " " * 14 for r in runs.values()]
    print(f"{k:4d} " + "".join(cells))

# where the greedy rule stops using pi
for r in runs["optimal"][22:28]:
    print(r.step, r.region, round(r.phi_used, 6), r.p_target)

# N=16 lands inside the interior region on step 2
for r in trajectory(16, "optimal", 4):
    print(r)
