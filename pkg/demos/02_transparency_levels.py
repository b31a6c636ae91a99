# %% [markdown]
# # Transparency at low energy
#
# As eta -> 0 the junction reflects almost everything, except at the discrete
# strengths sigma_n solving tan(sigma) = tanh(sigma). There T tends to
# 1 - tanh(sigma_n)^4, small but nonzero.

# %%
import numpy as np

from junction_spectra import resonance_levels, transmission_closed_form
from _plotting import plt, save

# %%
for lv in resonance_levels(6):
    print(f"n={lv.n}  sigma_n={lv.sigma_n:.10f}  T_n={lv.T_n:.4e}  jump^2={lv.jump_ratio_sq:.4e}")

# %% [markdown]
# The levels approach (n + 1/4) pi from below very quickly.

# %%
levels = resonance_levels(10)
print("sigma_10 - 41 pi / 4 =", levels[9].sigma_n - 41 * np.pi / 4)

# %% [markdown]
# Approaching a level at fixed sigma, the error of T shrinks with eta^2.

# %%
lv = levels[0]
for e in (1e-1, 1e-2, 1e-3, 1e-4):
    print(f"eta = {e:.0e}: T - T_1 = {float(transmission_closed_form(e, lv.sigma_n)) - lv.T_n:+.3e}")

# %%
if plt is not None:
    sig = np.linspace(0.01, 12, 1200)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    for e, style in ((0.0005, "-"), (0.05, "--"), (0.5, ":")):
        ax.plot(sig, np.log10(transmission_closed_form(e, sig)), style, label=f"eta = {e}")
    for lv in levels[:3]:
        ax.axvline(lv.sigma_n, color="grey", lw=0.5)
    ax.set_xlabel("sigma")
    ax.set_ylabel("log10 T")
    ax.legend()
    save(fig, "transparency_levels.png")
