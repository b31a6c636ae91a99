"""Cross-checks of every closed form against the transfer-matrix oracle.

``run_checks("quick")`` uses reduced grids and sample counts;
``run_checks("full")`` runs them at the sizes of the acceptance suite.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .junction import jump_ratio_sq, resonance_levels, resonance_sigmas, resonance_transmission, transmission_closed_form
from .potential import PiecewisePotential, Slab, build_barrier_well, build_double_delta
from .spectrum import bound_states, count_bound_states, spectrum_curves, threshold_root
from .transfer import (
    evaluate_scattering_wavefunction,
    find_bound_states_numeric,
    scatter,
    total_matrix,
    transmission,
)
from .waveguide import ModePoint, WaveguideConfig, cutoff_points, dispersion_curve, map_parameters, sector_of

__all__ = ["CheckResult", "run_checks", "random_stack", "transmission_grid", "CHECKS"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def transmission_grid(count: int = 200) -> tuple[np.ndarray, np.ndarray]:
    """eta in (0, 20] and sigma in [0, 20) sharing nodes so the diagonal eta = sigma is hit exactly."""
    eta = np.linspace(20.0 / count, 20.0, count)
    sigma = np.concatenate([[0.0], eta[:-1]])
    return eta, sigma


def random_stack(rng: np.random.Generator) -> tuple[PiecewisePotential, float]:
    """1-10 slabs, heights in [-100, 100], widths in [0.01, 0.05], energy in [-100, 100].

    Widths are capped so that entries of the product stay below ~1e3; wider
    stacks make det = 1 a statement about rounding, not about the solver.
    """
    n = int(rng.integers(1, 11))
    slabs = tuple(Slab(float(rng.uniform(0.01, 0.05)), float(rng.uniform(-100, 100))) for _ in range(n))
    pot = PiecewisePotential(slabs, x_left=float(rng.uniform(-1, 1)))
    return pot, float(rng.uniform(-100, 100))


def _oracle_equivalence(level, seed):
    eta, sigma = transmission_grid(200 if level == "full" else 50)
    closed = transmission_closed_form(eta[None, :], sigma[:, None])
    oracle = np.vstack([transmission(build_barrier_well(s), eta) for s in sigma])
    err = float(np.max(np.abs(closed - oracle)))
    return err <= 1e-10, f"max |T_closed - T_oracle| = {err:.2e} on {eta.size}x{sigma.size} grid"


def _resonances(level, seed):
    levels = resonance_levels(10)
    worst = max(abs(lv.residual) for lv in levels)
    asym = abs(levels[9].sigma_n - 41 * math.pi / 4)
    ok = worst < 1e-12 and asym < 1e-12 and abs(levels[0].sigma_n - 3.9266023) < 5e-8
    return ok, f"max residual {worst:.1e}, |sigma_10 - 41pi/4| = {asym:.1e}"


def _transparency_limit(level, seed):
    errs = []
    for s in resonance_sigmas(5):
        tn = resonance_transmission(s)
        errs.append([abs(transmission_closed_form(e, s) - tn) for e in (1e-2, 1e-3, 1e-4)])
    errs = np.array(errs)
    ratios = errs[:, :-1] / errs[:, 1:]
    ok = bool(np.all((ratios > 50) & (ratios < 200)) and np.all(errs[:, -1] < 1e-6))
    return ok, f"per-decade error ratios in [{ratios.min():.1f}, {ratios.max():.1f}], final max {errs[:, -1].max():.1e}"


def _reflecting_wall(level, seed):
    ts = [float(transmission_closed_form(1e-4, s)) for s in (2.0, 5.0, 9.0)]
    dd = build_double_delta(3.0)
    t_dd = scatter(dd, 1e-3).T
    node = abs(evaluate_scattering_wavefunction(dd, 1e-3, 0.0))
    t_res = scatter(build_barrier_well(resonance_sigmas(1)[0]), 1e-3).T
    ok = max(ts) < 1e-4 and t_dd < 1e-4 and node < 1e-2 and abs(t_res - 3.1e-3) < 5e-5
    return ok, (
        f"off-resonance T <= {max(ts):.1e}; double-delta T = {t_dd:.1e}, |psi(0)| = {node:.1e}; "
        f"barrier-well at sigma_1: T = {t_res:.3e}"
    )


def _jump_ratio(level, seed):
    s1 = resonance_sigmas(1)[0]
    pot = build_barrier_well(s1)
    psi_b = evaluate_scattering_wavefunction(pot, 1e-3, -1.0, incidence="right")
    psi_w = evaluate_scattering_wavefunction(pot, 1e-3, 1.0, incidence="right")
    ratio = abs(psi_b / psi_w) ** 2
    ref = jump_ratio_sq(s1)
    rel = abs(ratio - ref) / ref
    return rel < 1e-3 and ratio < 1, f"|psi_b/psi_w|^2 = {ratio:.6e} vs {ref:.6e} (rel {rel:.1e})"


def _bound_state_count(level, seed):
    n15 = count_bound_states(15.0)
    if level != "full":
        return n15 == 5 and len(bound_states(15.0)) == 5, f"count(15) = {n15}"
    curves = spectrum_curves(15.0, 0.01)
    expected = np.concatenate([[0.0], resonance_sigmas(4)])
    found = np.array([c.threshold for c in curves])
    ok = n15 == 5 and found.size == 5 and bool(np.all(np.abs(found - expected) <= 0.02))
    return ok, f"count(15) = {n15}, thresholds {np.round(found, 3).tolist()}"


def _bound_state_oracle(level, seed):
    worst = 0.0
    for s in (1.0, 5.0, 10.0, 15.0):
        closed = [b.zeta for b in bound_states(s)]
        oracle = find_bound_states_numeric(build_barrier_well(s), s)
        if len(closed) != len(oracle):
            return False, f"sigma={s}: {len(closed)} closed-form roots vs {len(oracle)} oracle roots"
        worst = max(worst, max(abs(a - b) for a, b in zip(closed, oracle)))
    return worst < 1e-9, f"max pairwise |zeta - zeta_oracle| = {worst:.1e}"


def _threshold_consistency(level, seed):
    rels = []
    for s in resonance_sigmas(2):
        sig = float(s) + 0.02
        z7 = bound_states(sig)[0].zeta
        z7a = threshold_root(sig, zeta_max=1.0)
        rels.append(abs(z7 - z7a) / z7)
    return max(rels) < 0.05, f"relative gaps {[f'{r:.3f}' for r in rels]}"


def _waveguide(level, seed):
    cfg = WaveguideConfig(1.0, 2.25, 1.0)
    on_line = max(abs(q - k * math.sqrt(cfg.eps_b)) / q for k, q in cutoff_points(cfg, 4))
    k1 = cutoff_points(cfg, 1)[0][0]
    q_at = dispersion_curve(cfg, 1, [k1 + 1e-7]).points[0].q
    jump = abs(q_at - k1 * math.sqrt(cfg.eps_b))
    size = 100 if level == "full" else 40
    mismatches = 0
    for k in np.linspace(0.05, 8.0, size):
        for q in np.linspace(0.0, 12.0, size):
            pt = ModePoint(float(k), float(q))
            mp = map_parameters(cfg, pt)
            if mp.regime != "scattering":
                continue
            b2 = mp.sigma ** 2 - mp.eta ** 2
            sec = sector_of(cfg, pt)
            tol = 1e-12 * mp.sigma ** 2 + 1e-300
            expected = "boundary" if abs(b2) <= tol else ("I" if b2 > 0 else "II")
            mismatches += sec != expected
    ok = on_line < 1e-12 and jump < 1e-6 and mismatches == 0
    return ok, f"cut-off line error {on_line:.1e}, q jump at cut-off {jump:.1e}, sector mismatches {mismatches}"


def _properties(level, seed):
    rng = np.random.default_rng(seed)
    cases = 1000 if level == "full" else 100
    det_err = tr_err = lr_err = split_err = 0.0
    for _ in range(cases):
        pot, energy = random_stack(rng)
        m = total_matrix(pot, energy)
        det_err = max(det_err, abs(m.det - 1.0))
        j = int(rng.integers(len(pot.slabs)))
        m2 = total_matrix(pot.split(j, float(rng.uniform(0.1, 0.9))), energy)
        split_err = max(split_err, float(np.max(np.abs(m.as_array() - m2.as_array()))))
        eta = float(rng.uniform(0.05, 10.0))
        res = scatter(pot, eta)
        tr_err = max(tr_err, abs(res.T + res.R - 1.0))
        lr_err = max(lr_err, abs(res.T - scatter(pot.mirrored(), eta).T))
    ok = det_err <= 1e-12 and tr_err <= 1e-12 and lr_err <= 1e-14 and split_err <= 1e-12
    return ok, (
        f"{cases} cases: |det-1| {det_err:.1e}, |T+R-1| {tr_err:.1e}, "
        f"|T_L-T_R| {lr_err:.1e}, split {split_err:.1e}"
    )


CHECKS: dict[str, Callable] = {
    "oracle_equivalence": _oracle_equivalence,
    "resonance_levels": _resonances,
    "transparency_limit": _transparency_limit,
    "reflecting_wall": _reflecting_wall,
    "jump_ratio": _jump_ratio,
    "bound_state_count": _bound_state_count,
    "bound_state_oracle": _bound_state_oracle,
    "threshold_consistency": _threshold_consistency,
    "waveguide_mapping": _waveguide,
    "property_suite": _properties,
}


def run_checks(level: str = "quick", seed: int = 0) -> list[CheckResult]:
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    results = []
    for name, check in CHECKS.items():
        t0 = time.perf_counter()
        try:
            ok, detail = check(level, seed)
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - t0))
    return results
