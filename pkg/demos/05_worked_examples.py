# # Worked examples with closed-form answers

# %%
import numpy as np

from jacobi_bands import bound_theorem, estimate_spectrum, gershgorin_intervals
from jacobi_bands.cases import gen_example_blockdiag, gen_example_diagpotential, gen_example_staircase

# Decoupled rows with potentials 4, 8, 12, ... produce bands that touch
# end to end. The measure is exactly 4 p1, which is also the coefficient
# bound, so that bound cannot be improved.

# %%
for p in (2, 3, 4):
    for gen in (gen_example_blockdiag, gen_example_diagpotential):
        x = gen(p)
        print(gen.__name__, p, round(estimate_spectrum(x, 128).measure, 6), bound_theorem(x))

# A potential with widely separated levels opens every possible gap: p - 1
# of them. Each band stays inside its own Gershgorin interval.

# %%
x = gen_example_staircase(3, 3, 0.1)
est = estimate_spectrum(x, 32)
print("gaps", est.gap_count)
intervals, _ = gershgorin_intervals(x)
print(np.array(intervals))
