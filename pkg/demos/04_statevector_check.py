# The two-dimensional map against the full 2^n statevector.
import math

import numpy as np

from grover_phase import ComplexPair, fourier_sign_matrix, grover_iterate_full, verify_reduction, walsh_hadamard
from grover_phase.experiments import verify_sweep

f = fourier_sign_matrix(3)
print(np.round(f * math.sqrt(8)).astype(int))

x = np.arange(8, dtype=complex)
print("fast transform matches dense:", np.allclose(walsh_hadamard(x), f @ x))

g = grover_iterate_full(3, 5, 1.0).dense()
print("unitary:", np.allclose(g @ g.conj().T, np.eye(8)))

rep = verify_reduction(8, 77, 2.1, ComplexPair(0.3j, math.sqrt(0.91)))
print(rep)

print(verify_sweep(8, 20, seed=1).report())
