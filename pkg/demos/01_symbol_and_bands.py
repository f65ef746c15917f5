# # Symbols and bands
#
# A doubly periodic operator on the square lattice reduces, after a Bloch
# transform, to a small Hermitian matrix S(x1, x2) that depends on two
# momenta. Its eigenvalues, followed over the torus, trace out the bands.

# %%
import numpy as np

from jacobi_bands import build_symbol, sample_bands, band_intervals, schroedinger_potential

# A (2,2)-periodic Schroedinger operator with a checkerboard potential.

# %%
coeffs = schroedinger_potential(2, 2, [[3.0, -3.0], [-3.0, 3.0]])
S = build_symbol(coeffs, (0.0, 0.0))
print(np.round(S.real, 3))

# The symbol is Hermitian at every momentum, and at the origin its
# eigenvalues are 5, 3, -3, -5.

# %%
print(np.linalg.eigvalsh(S)[::-1])

# Sampling a 64 x 64 grid gives one eigenvalue array per node. The k-th
# band is the range of the k-th largest eigenvalue.

# %%
grid = sample_bands(coeffs, 64, 64)
print(grid.lam.shape)
for band in band_intervals(grid):
    print(f"band {band.index}: [{band.l:.4f}, {band.r:.4f}]")
