# %% [markdown]
# # TE modes of an antisymmetric dielectric step
#
# A layer of half width a with permittivity eps_b - eps_m on one side and
# eps_b + eps_m on the other maps onto the barrier-well problem with
# sigma = k a sqrt(eps_m). Guided modes are bound states, and they leave the
# continuum exactly where the junction becomes transparent.

# %%
import numpy as np

from junction_spectra import (
    ModePoint,
    WaveguideConfig,
    cutoff_points,
    dispersion_curve,
    transverse_transmission,
)
from _plotting import plt, save

cfg = WaveguideConfig(a=1.0, eps_b=2.25, eps_m=1.0)

# %%
for n, (k, q) in enumerate(cutoff_points(cfg, 4), start=1):
    print(f"mode {n} cut-off: k = {k:.6f}, q = {q:.6f}, q/k = {q / k:.15f}")

# %% [markdown]
# Just below line 1 (q slightly under k sqrt(eps_b)) at the first cut-off the
# transverse transmission is the transparency value.

# %%
k1 = cutoff_points(cfg, 1)[0][0]
res = transverse_transmission(cfg, ModePoint(k1, cfg.line1(k1) * (1 - 1e-10)))
print(f"T near the first cut-off = {res.T:.6e} (sector {res.sector})")

# %%
ks = np.linspace(0.01, 12, 600)
curves = [dispersion_curve(cfg, n, ks) for n in range(4)]
for c in curves:
    print(f"mode {c.n}: {len(c.points)} samples, first k = {c.points[0].k:.3f}")

if plt is not None:
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.plot(ks, [cfg.line1(k) for k in ks], "k-", lw=0.8, label="line 1")
    ax.plot(ks, [cfg.line2(k) for k in ks], "k--", lw=0.8, label="line 2")
    for c in curves:
        ax.plot([p.k for p in c.points], [p.q for p in c.points], label=f"n = {c.n}")
    ax.plot(*zip(*cutoff_points(cfg, 3)), "ko", ms=3)
    ax.set_xlabel("k")
    ax.set_ylabel("q")
    ax.legend(fontsize=8)
    save(fig, "waveguide_modes.png")
