"""The ten acceptance criteria, each at its stated tolerance.

Every test prints one ``criterion N PASS|FAIL`` line; the lines are repeated
in an "acceptance criteria" block of the pytest summary.
"""
import math
import time

import numpy as np
import pytest

from junction_spectra.cli import main
from junction_spectra.junction import (
    jump_ratio_sq,
    resonance_levels,
    resonance_sigmas,
    resonance_transmission,
    transmission_closed_form,
)
from junction_spectra.potential import build_barrier_well, build_double_delta
from junction_spectra.spectrum import bound_states, count_bound_states, spectrum_curves, threshold_root
from junction_spectra.transfer import (
    evaluate_scattering_wavefunction,
    find_bound_states_numeric,
    scatter,
    total_matrix,
    transmission,
)
from junction_spectra.verify import random_stack, transmission_grid
from junction_spectra.waveguide import ModePoint, WaveguideConfig, cutoff_points, dispersion_curve, map_parameters, sector_of

from conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    def _report(number: int, ok: bool, detail: str):
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print(f"\n{line}")
        assert ok, line

    return _report


def test_criterion_01_oracle_equivalence(report):
    t0 = time.perf_counter()
    eta, sigma = transmission_grid(200)
    closed = transmission_closed_form(eta[None, :], sigma[:, None])
    oracle = np.vstack([transmission(build_barrier_well(s), eta) for s in sigma])
    elapsed = time.perf_counter() - t0
    err = float(np.max(np.abs(closed - oracle)))
    diagonal = int(np.sum(eta[None, :] == sigma[:, None]))
    ok = err <= 1e-10 and elapsed < 10 and diagonal == 199 and sigma[0] == 0 and eta[-1] == 20
    report(1, ok, f"max |T_closed - T_oracle| = {err:.2e} on 200x200 ({diagonal} diagonal nodes), {elapsed:.2f}s")


def _scan_oracle_levels(n_max: int) -> list[float]:
    # independent of the package: dense scan of sin s cosh s - cos s sinh s, then scalar bisection
    grid = np.arange(0.5, n_max * math.pi + 2.0, 1e-4)
    f = lambda s: math.sin(s) * math.cosh(s) - math.cos(s) * math.sinh(s)
    vals = np.sin(grid) * np.cosh(grid) - np.cos(grid) * np.sinh(grid)
    roots = []
    for i in np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0][:n_max]:
        lo, hi = float(grid[i]), float(grid[i + 1])
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            if (f(lo) > 0) == (f(mid) > 0):
                lo = mid
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    return roots


def test_criterion_02_resonance_levels(report):
    levels = resonance_levels(10)
    residual = max(abs(math.tan(lv.sigma_n) - math.tanh(lv.sigma_n)) for lv in levels)
    scan = _scan_oracle_levels(2)
    digits = all(float(f"{lv.sigma_n:.7g}") == float(f"{s:.7g}") for lv, s in zip(levels[:2], scan))
    pinned = f"{levels[0].sigma_n:.7f}" == "3.9266023" and f"{levels[1].sigma_n:.7f}" == "7.0685827"
    asym = abs(levels[9].sigma_n - 41 * math.pi / 4)
    ok = residual < 1e-12 and digits and pinned and asym < 1e-12
    report(2, ok, f"max |tan - tanh| = {residual:.1e}; sigma_1,2 = {levels[0].sigma_n:.7f}, {levels[1].sigma_n:.7f} "
                  f"(scan {scan[0]:.7f}, {scan[1]:.7f}); |sigma_10 - 41pi/4| = {asym:.1e}")


def _one_minus_tanh4(s: float) -> float:
    # 1 - t^4 = (1 - t^2)(1 + t^2) with 1 - t^2 = sech^2, free of cancellation
    return (1 + math.tanh(s) ** 2) / math.cosh(s) ** 2


def test_criterion_03_transparency_limit(report):
    errs = np.array([
        [abs(float(transmission_closed_form(e, s)) - _one_minus_tanh4(s)) for e in (1e-2, 1e-3, 1e-4)]
        for s in resonance_sigmas(5)
    ])
    ratios = errs[:, :-1] / errs[:, 1:]
    ok = bool(np.all(np.abs(np.log10(ratios) - 2) < 0.3)) and float(errs[:, -1].max()) < 1e-6
    report(3, ok, f"per-decade error ratio in [{ratios.min():.1f}, {ratios.max():.1f}], "
                  f"error at eta = 1e-4 <= {errs[:, -1].max():.1e}")


def test_criterion_04_reflecting_wall(report):
    ts = [float(transmission_closed_form(1e-4, s)) for s in (2.0, 5.0, 9.0)]
    dd = build_double_delta(3.0)
    t_dd = scatter(dd, 1e-3).T
    node = abs(evaluate_scattering_wavefunction(dd, 1e-3, 0.0))
    ok = max(ts) < 1e-4 and t_dd < 1e-4 and node < 1e-2
    report(4, ok, f"barrier-well T(1e-4, {{2, 5, 9}}) <= {max(ts):.1e}; double delta T(1e-3, 3) = {t_dd:.1e}, |psi(0)| = {node:.1e}")


def test_criterion_05_jump_ratio(report):
    s1 = float(resonance_sigmas(1)[0])
    pot = build_barrier_well(s1)
    psi_b = evaluate_scattering_wavefunction(pot, 1e-3, -1.0, incidence="right")
    psi_w = evaluate_scattering_wavefunction(pot, 1e-3, 1.0, incidence="right")
    ratio = abs(psi_b / psi_w) ** 2
    ref = (1 - math.tanh(s1) ** 2) / (1 + math.tanh(s1) ** 2)
    rel = abs(ratio - ref) / ref
    report(5, rel < 1e-3 and ratio < 1, f"|psi(-1)/psi(+1)|^2 = {ratio:.6e} vs {ref:.6e}, rel {rel:.1e} (wave incident from the well side)")


def test_criterion_06_bound_state_count(report):
    n = count_bound_states(15.0)
    curves = spectrum_curves(15.0, 0.01)
    found = np.array([c.threshold for c in curves])
    expected = np.concatenate([[0.0], resonance_sigmas(4)])
    ok = n == 5 and found.size == 5 and bool(np.all(np.abs(found - expected) <= 0.02))
    report(6, ok, f"count(15) = {n}; thresholds {np.round(found, 3).tolist()} vs {np.round(expected, 3).tolist()}")


def test_criterion_07_bound_state_oracle(report):
    worst, counts = 0.0, []
    ok = True
    for s in (1.0, 5.0, 10.0, 15.0):
        closed = [b.zeta for b in bound_states(s)]
        oracle = find_bound_states_numeric(build_barrier_well(s), s)
        counts.append(len(closed))
        ok &= len(closed) == len(oracle)
        worst = max([worst] + [abs(a - b) for a, b in zip(closed, oracle)])
    report(7, ok and worst < 1e-9, f"roots per sigma {counts}; max pairwise |zeta - zeta_oracle| = {worst:.1e}")


def test_criterion_08_threshold_consistency(report):
    rels = []
    for s in resonance_sigmas(2):
        sig = float(s) + 0.02
        z = bound_states(sig)[0].zeta
        rels.append(abs(z - threshold_root(sig, 1.0)) / z)
    report(8, max(rels) < 0.05, "relative gaps " + ", ".join(f"{r:.4f}" for r in rels))


def test_criterion_09_waveguide_mapping(report):
    cfg = WaveguideConfig(1.0, 2.25, 1.0)
    on_line = max(abs(q - k * math.sqrt(cfg.eps_b)) / q for k, q in cutoff_points(cfg, 10))
    jumps = []
    for n, (kn, qn) in enumerate(cutoff_points(cfg, 3), start=1):
        jumps.append(abs(dispersion_curve(cfg, n, [kn + 1e-7]).points[0].q - qn))
    mismatches = checked = 0
    for k in np.linspace(0.05, 8.0, 100):
        for q in np.linspace(0.0, 12.0, 100):
            pt = ModePoint(float(k), float(q))
            mp = map_parameters(cfg, pt)
            if mp.regime != "scattering":
                continue
            checked += 1
            b2 = mp.sigma**2 - mp.eta**2
            mismatches += sector_of(cfg, pt) != ("I" if b2 > 0 else "II")
    ok = on_line < 1e-12 and max(jumps) < 1e-6 and mismatches == 0
    report(9, ok, f"cut-off line error {on_line:.1e}; q jump at cut-off {max(jumps):.1e}; "
                  f"sector mismatches {mismatches}/{checked}")


def test_criterion_10_property_suite(report, capsys):
    rng = np.random.default_rng(20240601)
    det = tr = lr = split = 0.0
    for _ in range(1000):
        pot, energy = random_stack(rng)
        m = total_matrix(pot, energy)
        det = max(det, abs(m.det - 1.0))
        j = int(rng.integers(len(pot.slabs)))
        m2 = total_matrix(pot.split(j, float(rng.uniform(0.1, 0.9))), energy)
        split = max(split, float(np.max(np.abs(m.as_array() - m2.as_array()))))
        eta = float(rng.uniform(0.05, 10.0))
        res = scatter(pot, eta)
        tr = max(tr, abs(res.T + res.R - 1.0))
        lr = max(lr, abs(res.T - scatter(pot.mirrored(), eta).T))
    t0 = time.perf_counter()
    code = main(["verify", "--level", "full"])
    elapsed = time.perf_counter() - t0
    verify_out = capsys.readouterr().out
    ok = det <= 1e-12 and tr <= 1e-12 and lr <= 1e-14 and split <= 1e-12 and code == 0 and elapsed < 60
    report(10, ok, f"1000 cases: |det-1| {det:.1e}, |T+R-1| {tr:.1e}, |T_L-T_R| {lr:.1e}, split {split:.1e}; "
                   f"verify --level full exit {code} in {elapsed:.1f}s")
    assert verify_out.count("PASS") == 10
