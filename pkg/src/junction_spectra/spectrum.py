"""Bound states of the barrier-well junction.

With binding parameter ``zeta`` (energy -zeta**2) the auxiliary arguments
swap roles relative to scattering: ``alpha**2 = sigma**2 - zeta**2`` and
``beta**2 = sigma**2 + zeta**2``. Roots are searched on the pole-free
form of the spectral equation, obtained by multiplying it through by
``2 zeta cos(alpha)`` and absorbing every 1/alpha, 1/beta into the sinc
and tanh(beta)/beta factors. Times cosh(beta) it coincides with the
transfer-matrix mismatch of :mod:`junction_spectra.transfer`, so it has no
zeros besides the bound states.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from ._roots import scan_roots
from .junction import resonance_sigmas
from .potential import MAX_SIGMA
from .transfer import analytic_cos, analytic_sinc

__all__ = [
    "BoundState",
    "SpectrumCurve",
    "ThresholdProximityError",
    "BranchCrossingWarning",
    "bound_state_residual",
    "spectral_equation",
    "bound_states",
    "bound_state_zeta",
    "count_bound_states",
    "threshold_residual",
    "threshold_root",
    "trace_curves",
    "spectrum_curves",
]

SCAN_POINTS = 2000
THRESHOLD_GUARD = 1e-9
WEAK_SIGMA = 1e-6


class ThresholdProximityError(ValueError):
    """sigma sits on a level where a bound state is just emerging."""


class BranchCrossingWarning(UserWarning):
    pass


@dataclass(frozen=True)
class BoundState:
    n: int
    zeta: float
    sigma: float

    @property
    def residual(self) -> float:
        return float(bound_state_residual(self.zeta, self.sigma))


@dataclass
class SpectrumCurve:
    """Samples (sigma, zeta) of branch ``n``, ordered by sigma."""

    n: int
    samples: list[tuple[float, float]] = field(default_factory=list)

    @property
    def threshold(self) -> float:
        """First sampled sigma at which the branch exists."""
        return self.samples[0][0]


def _check_domain(zeta, sigma):
    if np.any(~(zeta > 0)) or np.any(~(zeta <= sigma)):
        raise ValueError("bound-state residual needs 0 < zeta <= sigma")


def bound_state_residual(zeta, sigma):
    """Pole-free spectral function; its zeros in (0, sigma] are the bound states.

    Equals ``2 zeta cos(alpha)`` times the tan/tanh form returned by
    :func:`spectral_equation`. It stays of order sigma**3, so an absolute
    residual is meaningful at every supported sigma.
    """
    zeta = np.asarray(zeta, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    _check_domain(zeta, sigma)
    z2, s2 = zeta * zeta, sigma * sigma
    a2, b2 = s2 - z2, s2 + z2
    ca, sa = analytic_cos(a2), analytic_sinc(a2)    # cos a, sin a / a
    b = np.sqrt(b2)
    th = np.tanh(b) / b                             # tanh b / b; b >= sigma > 0
    out = (
        2.0 * zeta * z2 * sa * th
        + z2 * (sa + ca * th)
        + 2.0 * zeta * ca
        - a2 * sa
        + b2 * ca * th
    )
    return out[()]


def spectral_equation(zeta, sigma):
    """The spectral equation in its original tan/tanh form (has poles at cos(alpha) = 0)."""
    zeta = np.asarray(zeta, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    _check_domain(zeta, sigma)
    a = np.sqrt(sigma * sigma - zeta * zeta)
    b = np.sqrt(sigma * sigma + zeta * zeta)
    tan_over_a = analytic_sinc(a * a) / analytic_cos(a * a)   # tan(a)/a, finite at a = 0
    tanh_b = np.tanh(b)
    out = (
        zeta * zeta * tan_over_a * tanh_b / b
        + 0.5 * zeta * (tan_over_a + tanh_b / b)
        + 1.0
        - (a * a * tan_over_a - b * tanh_b) / (2.0 * zeta)
    )
    return out[()]


def _check_sigma(sigma) -> float:
    sigma = float(sigma)
    if not math.isfinite(sigma) or sigma < 0:
        raise ValueError(f"sigma must be a non-negative finite number, got {sigma!r}")
    if sigma > MAX_SIGMA:
        raise ValueError(f"sigma={sigma} exceeds the supported range sigma <= {MAX_SIGMA}")
    return sigma


def _levels_up_to(sigma: float) -> np.ndarray:
    return resonance_sigmas(int(sigma / math.pi) + 2)


def _scan_grid(sigma: float) -> np.ndarray:
    # the deepest state binds only at zeta ~ sigma**4 / 3 for weak junctions,
    # so the linear grid gets a logarithmic lead-in down to well below that
    lin = np.linspace(sigma / SCAN_POINTS, sigma, SCAN_POINTS)
    floor = max(min(1e-3 * sigma**4, 1e-3 * lin[0]), 1e-300)
    return np.concatenate([np.geomspace(floor, lin[0], 200, endpoint=False), lin])


def bound_states(sigma: float) -> list[BoundState]:
    """All bound states at strength ``sigma``, ascending in zeta.

    Index n labels the branch that emerges at level sigma_n, so the most
    deeply bound state (largest zeta) is n = 0.

    Below ``WEAK_SIGMA`` the single state has zeta = sigma**4 / 3 to
    relative order sigma**2, smaller than the residual can resolve, so the
    series value is returned instead.
    """
    sigma = _check_sigma(sigma)
    if sigma == 0:
        return []
    if sigma < WEAK_SIGMA:
        return [BoundState(n=0, zeta=sigma**4 / 3.0, sigma=sigma)]
    roots = scan_roots(lambda z: bound_state_residual(z, sigma), _scan_grid(sigma), xtol=1e-15)
    count = len(roots)
    return [BoundState(n=count - 1 - i, zeta=float(z), sigma=sigma) for i, z in enumerate(roots)]


def count_bound_states(sigma: float) -> int:
    """Number of bound states from the level ordering: N + 1 for sigma_N < sigma < sigma_{N+1}."""
    sigma = _check_sigma(sigma)
    if sigma == 0:
        return 0
    levels = np.concatenate([[0.0], _levels_up_to(sigma)])
    if np.any(np.abs(levels - sigma) < THRESHOLD_GUARD):
        raise ThresholdProximityError(
            f"sigma={sigma} is within {THRESHOLD_GUARD} of a level; the count is ambiguous"
        )
    return int(np.count_nonzero(levels < sigma))


def bound_state_zeta(sigma: float, n: int) -> float | None:
    """zeta_n(sigma), or None below that branch's threshold.

    Exactly at (or numerically indistinguishable from) the threshold the
    branch has zeta = 0.
    """
    sigma = _check_sigma(sigma)
    if n < 0:
        raise ValueError("branch index must be non-negative")
    onset = 0.0 if n == 0 else float(resonance_sigmas(n)[-1])
    if sigma < onset - THRESHOLD_GUARD:
        return None
    if sigma <= onset + THRESHOLD_GUARD:
        return 0.0
    states = {s.n: s.zeta for s in bound_states(sigma)}
    # a branch whose root lies below the scan floor is still at zeta ~ 0
    return states.get(n, 0.0)


def threshold_residual(sigma, zeta):
    """alpha tan(alpha) - beta tanh(beta) - 2 zeta, the small-zeta limit of the spectral equation."""
    sigma = np.asarray(sigma, dtype=float)
    zeta = np.asarray(zeta, dtype=float)
    a = np.sqrt(sigma * sigma - zeta * zeta)
    b = np.sqrt(sigma * sigma + zeta * zeta)
    return (a * np.tan(a) - b * np.tanh(b) - 2.0 * zeta)[()]


def _threshold_pole_free(sigma, zeta):
    a2 = sigma * sigma - zeta * zeta
    b = np.sqrt(sigma * sigma + zeta * zeta)
    return a2 * analytic_sinc(a2) - (b * np.tanh(b) + 2.0 * zeta) * analytic_cos(a2)


def threshold_root(sigma: float, zeta_max: float | None = None) -> float | None:
    """Smallest positive root of :func:`threshold_residual` below ``zeta_max``."""
    sigma = float(sigma)
    zeta_max = sigma if zeta_max is None else min(zeta_max, sigma)
    grid = np.linspace(1e-9 * sigma, zeta_max, SCAN_POINTS)
    roots = scan_roots(lambda z: _threshold_pole_free(sigma, z), grid, xtol=1e-15)
    return float(roots[0]) if roots.size else None


def trace_curves(sigmas) -> list[SpectrumCurve]:
    """Follow each branch zeta_n(sigma) across the given strengths."""
    sigmas = np.sort(np.asarray(sigmas, dtype=float))
    curves: dict[int, SpectrumCurve] = {}
    for s in sigmas:
        states = bound_states(float(s))
        zetas = [b.zeta for b in states]
        if len(zetas) > 1 and np.min(np.diff(zetas)) < 1e-10:
            warnings.warn(f"two branches within 1e-10 at sigma={s}", BranchCrossingWarning, stacklevel=2)
        for b in states:
            curves.setdefault(b.n, SpectrumCurve(b.n)).samples.append((float(s), b.zeta))
    return [curves[n] for n in sorted(curves)]


def spectrum_curves(sigma_max: float, step: float) -> list[SpectrumCurve]:
    """Branches sampled at sigma = step, 2 step, ... up to ``sigma_max``."""
    if not step > 0:
        raise ValueError("step must be positive")
    _check_sigma(sigma_max)
    count = int(math.floor(sigma_max / step + 1e-9))
    return trace_curves(step * np.arange(1, count + 1))
