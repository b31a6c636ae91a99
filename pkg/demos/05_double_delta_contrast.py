# %% [markdown]
# # Barrier-well versus double delta
#
# Replacing the two slabs by a repulsive delta at x = -1 and an attractive one
# at x = +1 gives a junction that is a perfect wall at low energy: T -> 0 and
# the wave function develops a node at the origin. The barrier-well junction
# instead keeps a window of transmission at each transparency level.

# %%
from junction_spectra import (
    build_barrier_well,
    build_double_delta,
    evaluate_scattering_wavefunction,
    resonance_sigmas,
    scatter,
)

s1 = float(resonance_sigmas(1)[0])
for eta in (1e-1, 1e-2, 1e-3):
    dd = build_double_delta(3.0)
    node = abs(evaluate_scattering_wavefunction(dd, eta, 0.0))
    print(
        f"eta = {eta:.0e}: double delta T = {scatter(dd, eta).T:.2e}, |psi(0)| = {node:.2e};"
        f" barrier-well at sigma_1 T = {scatter(build_barrier_well(s1), eta).T:.3e}"
    )

# %% [markdown]
# At the level the wave function jumps across the junction. Seen from the well
# side, the squared ratio of the barrier-side and well-side values matches
# (1 - tanh^2 sigma_1) / (1 + tanh^2 sigma_1).

# %%
from junction_spectra import jump_ratio_sq

pot = build_barrier_well(s1)
psi_b = evaluate_scattering_wavefunction(pot, 1e-3, -1.0, incidence="right")
psi_w = evaluate_scattering_wavefunction(pot, 1e-3, 1.0, incidence="right")
print(f"|psi_b / psi_w|^2 = {abs(psi_b / psi_w) ** 2:.6e}, limit {float(jump_ratio_sq(s1)):.6e}")
