import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from junction_spectra.junction import (
    AuxiliaryPair,
    jump_ratio_sq,
    resonance_levels,
    resonance_residual,
    resonance_sigmas,
    resonance_transmission,
    transmission_closed_form,
)
from junction_spectra.potential import build_barrier_well
from junction_spectra.transfer import transmission

from conftest import JUMP_1, SIGMA_1, SIGMA_2, SIGMA_3, T_1, T_2


# --------------------------------------------------------------- closed form T


@pytest.mark.parametrize("eta", [1e-3, 0.5, 3.0, 40.0])
def test_free_particle(eta):
    assert transmission_closed_form(eta, 0.0) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize(
    "eta, sigma, expected",
    [(1.0, 2.0, 0.045523950306181098), (15.0, 10.0, 0.8634953393560694), (3.0, 3.0, 0.21230335708807767)],
)
def test_against_high_precision_reference(eta, sigma, expected):
    assert transmission_closed_form(eta, sigma) == pytest.approx(expected, rel=1e-12)


def test_matches_oracle_on_grid():
    etas = np.linspace(0.05, 20, 40)
    for s in np.linspace(0, 20, 21):
        closed = transmission_closed_form(etas, s)
        oracle = transmission(build_barrier_well(s), etas)
        assert np.max(np.abs(closed - oracle)) <= 1e-10


@pytest.mark.parametrize("sigma", [0.5, 3.0, 7.7, 15.0])
def test_continuous_across_diagonal(sigma):
    lo = transmission_closed_form(sigma * (1 - 1e-7), sigma)
    on = transmission_closed_form(sigma, sigma)
    hi = transmission_closed_form(sigma * (1 + 1e-7), sigma)
    assert abs(lo - hi) < 1e-6 and abs(on - lo) < 1e-6


def test_section_at_eta_15():
    sig = np.linspace(0, 20, 401)
    t = transmission_closed_form(15.0, sig)
    assert np.all(t[sig <= 8] > 0.95)
    near = t[(sig > 11) & (sig < 15)]
    assert near.max() - near.min() > 0.5
    assert np.all(t[sig >= 16] < 0.05)


def test_vectorized_broadcast():
    t = transmission_closed_form(np.array([1.0, 2.0])[None, :], np.array([0.0, 1.0, 2.0])[:, None])
    assert t.shape == (3, 2)


def test_rejects_nonpositive_eta_and_negative_sigma():
    with pytest.raises(ValueError):
        transmission_closed_form(0.0, 1.0)
    with pytest.raises(ValueError):
        transmission_closed_form(1.0, -1.0)


def test_auxiliary_pair():
    aux = AuxiliaryPair.from_scattering(3.0, 2.0)
    assert aux.alpha_sq == 13.0 and aux.beta_sq == -5.0


# ------------------------------------------------------------ small-eta limits


def test_first_level_limit():
    t = transmission_closed_form(1e-4, SIGMA_1)
    assert t == pytest.approx(3.1e-3, rel=0.01)
    errs = [abs(transmission_closed_form(e, SIGMA_1) - T_1) for e in (1e-2, 1e-3, 1e-4)]
    assert errs[0] / errs[1] == pytest.approx(100, rel=0.05)
    assert errs[1] / errs[2] == pytest.approx(100, rel=0.05)


def test_off_resonance_goes_to_zero_quadratically():
    assert transmission_closed_form(1e-4, 5.0) < 1e-4
    ts = [transmission_closed_form(e, 5.0) for e in (1e-2, 1e-3, 1e-4)]
    assert ts[0] / ts[1] == pytest.approx(100, rel=0.05)
    assert ts[1] / ts[2] == pytest.approx(100, rel=0.05)


# ------------------------------------------------------------- resonance levels


def test_first_levels_against_reference():
    s = resonance_sigmas(3)
    assert s == pytest.approx([SIGMA_1, SIGMA_2, SIGMA_3], abs=1e-13)
    assert round(s[0], 7) == 3.9266023
    assert round(s[1], 7) == 7.0685827


def test_tenth_level_asymptote():
    assert abs(resonance_sigmas(10)[-1] - 41 * math.pi / 4) < 1e-12


def test_levels_properties():
    levels = resonance_levels(12)
    sig = np.array([lv.sigma_n for lv in levels])
    assert [lv.n for lv in levels] == list(range(1, 13))
    assert np.all(np.diff(sig) > 0)
    assert all(abs(lv.residual) < 1e-12 for lv in levels)
    gaps = np.diff(sig) - math.pi
    assert np.all(np.abs(gaps[4:]) < 1e-10)
    assert np.all(np.diff(np.abs(gaps[:5])) < 0)
    t = np.array([lv.T_n for lv in levels])
    assert np.all(np.diff(t) < 0) and np.all((t > 0) & (t < 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_one_root_per_bracket(n):
    # dense scan of tan - tanh away from the pole
    x = np.linspace(n * math.pi + 1e-9, n * math.pi + math.pi / 2 - 1e-6, 200001)
    g = np.tan(x) - np.tanh(x)
    assert g[0] < 0 and g[-1] > 0
    assert np.count_nonzero(np.sign(g[:-1]) != np.sign(g[1:])) == 1


def test_invalid_count():
    with pytest.raises(ValueError):
        resonance_sigmas(0)


def test_residual_of_trivial_root():
    assert resonance_residual(0.0) == 0.0


# --------------------------------------------------- limiting T and jump ratio


def test_resonance_transmission_values():
    assert resonance_transmission(1e-9) == pytest.approx(1.0)
    assert resonance_transmission(SIGMA_1) == pytest.approx(T_1, rel=1e-13)
    assert resonance_transmission(SIGMA_1) == pytest.approx(3.10e-3, abs=5e-6)
    assert resonance_transmission(SIGMA_2) == pytest.approx(T_2, rel=1e-12)
    assert resonance_transmission(SIGMA_2) == pytest.approx(5.80e-6, abs=5e-9)


def test_jump_ratio_values():
    assert jump_ratio_sq(1e-9) == pytest.approx(1.0)
    assert jump_ratio_sq(SIGMA_1) == pytest.approx(JUMP_1, rel=1e-13)
    assert jump_ratio_sq(SIGMA_1) == pytest.approx(7.77e-4, rel=1e-3)


@given(st.floats(1e-6, 40.0))
def test_jump_ratio_below_one(s):
    assert 0 < jump_ratio_sq(s) < 1


@given(st.floats(0.0, 18.0))
def test_limit_identity(s):
    t = math.tanh(s)
    assert resonance_transmission(s) == pytest.approx(1 - t**4, abs=1e-15)
