# %% [markdown]
# # Transmission through a barrier-well junction
#
# A thin barrier of height sigma^2 sits on (-1, 0) and a well of depth sigma^2
# on (0, 1). Everything below is in units where hbar^2/2m = 1 and the half
# width is 1, so the energy is eta^2.

# %%
import numpy as np

from junction_spectra import build_barrier_well, transmission, transmission_closed_form
from _plotting import plt, save

# %% [markdown]
# The closed form and the transfer-matrix product give the same T everywhere,
# including the line eta = sigma where the barrier is exactly at the energy.

# %%
eta = np.linspace(0.1, 20, 200)
sigma = np.concatenate([[0.0], eta[:-1]])
T = transmission_closed_form(eta[None, :], sigma[:, None])
oracle = np.vstack([transmission(build_barrier_well(s), eta) for s in sigma])
print("max |closed - transfer matrix| =", np.abs(T - oracle).max())

diag = transmission_closed_form(eta, eta)
print("T on eta = sigma, first few:", np.round(diag[:5], 4))

# %% [markdown]
# Away from the diagonal the junction is almost opaque at low energy, and at
# high energy it becomes transparent again.

# %%
for e in (0.1, 1.0, 5.0, 20.0):
    print(f"eta = {e:5.1f}: T(sigma = 5) = {float(transmission_closed_form(e, 5.0)):.3e}")

# %%
if plt is not None:
    fig, ax = plt.subplots(figsize=(5, 4))
    mesh = ax.pcolormesh(eta, sigma, T, shading="auto", cmap="viridis")
    ax.plot(eta, eta, color="white", lw=1)
    ax.set_xlabel("eta")
    ax.set_ylabel("sigma")
    fig.colorbar(mesh, label="T")
    save(fig, "transmission_surface.png")
