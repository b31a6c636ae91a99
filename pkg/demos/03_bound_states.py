# %% [markdown]
# # Bound states
#
# At negative energy -zeta^2 the junction holds one more bound state every
# time sigma passes a transparency level. The deepest state (n = 0) exists
# for every sigma > 0.

# %%
import numpy as np

from junction_spectra import (
    build_barrier_well,
    bound_states,
    count_bound_states,
    find_bound_states_numeric,
    resonance_sigmas,
    spectrum_curves,
)
from _plotting import plt, save

# %%
for b in bound_states(15.0):
    print(f"n={b.n}  zeta={b.zeta:.12f}  residual={b.residual:+.1e}")
print("count at sigma = 15:", count_bound_states(15.0))

# %% [markdown]
# The roots agree with a search over the transfer-matrix mismatch, which knows
# nothing about the closed spectral equation.

# %%
closed = [b.zeta for b in bound_states(10.0)]
oracle = find_bound_states_numeric(build_barrier_well(10.0), 10.0)
print("max |closed - oracle| at sigma = 10:", max(abs(a - b) for a, b in zip(closed, oracle)))

# %% [markdown]
# A weak junction still binds, but only at fourth order: zeta ~ sigma^4 / 3.

# %%
for s in (0.3, 0.1, 0.03):
    print(f"sigma = {s}: zeta_0 = {bound_states(s)[0].zeta:.4e}, sigma^4/3 = {s**4 / 3:.4e}")

# %%
curves = spectrum_curves(15.0, 0.05)
print("branch thresholds:", [round(c.threshold, 2) for c in curves])
print("levels:           ", np.round(resonance_sigmas(4), 2).tolist())

if plt is not None:
    fig, ax = plt.subplots(figsize=(5, 4))
    for c in curves:
        s, z = np.array(c.samples).T
        ax.plot(s, z, label=f"n = {c.n}")
    ax.set_xlabel("sigma")
    ax.set_ylabel("zeta")
    ax.legend()
    save(fig, "bound_states.png")
