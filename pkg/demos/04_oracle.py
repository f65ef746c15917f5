# # Checking the Bloch reduction by brute force
#
# On a finite torus of N1 x N2 period cells the operator is an ordinary
# Hermitian matrix. Its eigenvalues must coincide with the symbol
# eigenvalues at the momenta 2 pi j / N1, 2 pi k / N2.

# %%
import numpy as np

from jacobi_bands import functional_model_check, random_coefficients, supercell_matrix

rng = np.random.default_rng(0)
coeffs = random_coefficients(3, 3, rng)
H = supercell_matrix(coeffs, 4, 4)
print(H.shape, "hermitian:", np.allclose(H, H.conj().T))

# The largest mismatch between the two sorted eigenvalue lists:

# %%
for n in (1, 2, 4, 6):
    print(n, functional_model_check(coeffs, n, n))
