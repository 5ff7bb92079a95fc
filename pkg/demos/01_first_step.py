# Which phase should the very first iteration use?
import math

import numpy as np

from grover_phase import first_step_argmax, first_step_objective, optimal_phase_general, hadamard_init, polar_decompose

for n in (2, 3, 4, 16, 1024):
    u = np.linspace(-1, 1, 9)
    print(f"N={n:5d}  u*={first_step_argmax(n):+.3f}  P(u) =", np.round(first_step_objective(n, u), 4))

# the numeric optimizer agrees, pi for N >= 4
for n in (2, 4, 64, 2**20):
    res = optimal_phase_general(n, polar_decompose(hadamard_init(n)))
    print(f"N={n:8d}  phi_opt={res.phi_opt:.12f}  P={res.p_opt:.6f}  cos={math.cos(res.phi_opt):+.2e}")
