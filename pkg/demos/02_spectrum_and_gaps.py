# # Spectrum, measure and gaps
#
# The spectrum is the union of the bands. Overlapping bands merge, and
# what is left between components are the gaps.

# %%
from jacobi_bands import estimate_spectrum, refine_spectrum
from jacobi_bands.cases import gen_two_param, two_param_reference

# Refining the grid until band edges settle:

# %%
coeffs = gen_two_param(4.0, 2.0)
est = refine_spectrum(coeffs, 1e-4)
print("grid", est.grid)
print("components", est.components)
print("measure", round(est.measure, 6), "gaps", est.gap_count)

# Narrow gaps are easy to miss or to invent on a grid. The enclosure
# mode pads each band by a Lipschitz bound on the eigenvalues, so a gap it
# reports is really there.

# %%
for c1, c2 in [(4, 2), (2.05, 2), (1, 1), (2, 2)]:
    inner = estimate_spectrum(gen_two_param(c1, c2), 512)
    outer = estimate_spectrum(gen_two_param(c1, c2), 512, enclosure=True)
    ref = two_param_reference(c1, c2)
    print((c1, c2), "sampled", inner.gap_count, "enclosure", outer.gap_count, "closed form", ref.gap_count)
