# # Upper bounds on the size of the spectrum
#
# Several bounds on the total length of the spectrum are available from
# the coefficients alone. They differ a lot in sharpness.

# %%
import numpy as np

from jacobi_bands import bounds_report, estimate_spectrum, random_coefficients, schroedinger_potential

# For the free Laplacian with periods (3, 3) the spectrum is [-4, 4].

# %%
free = schroedinger_potential(3, 3, np.zeros((3, 3)))
report = bounds_report(free, measured=estimate_spectrum(free, 64).measure)
for key in ("theorem_bound", "kruger_bound", "trivial_bound", "gershgorin_bound"):
    print(f"{key:18s} {getattr(report, key):.4f}")
print("measured", report.comparison["measured"])

# The coefficient bound is the smallest entry of the matrix R.

# %%
print(np.array(report.R))

# On a random model the ordering still holds, while the Gershgorin bound
# becomes loose.

# %%
rng = np.random.default_rng(7)
x = random_coefficients(3, 4, rng)
print(bounds_report(x, measured=estimate_spectrum(x, 64).measure).to_json())
