"""Closed-form scattering through the barrier-well junction.

All quantities are functions of the dimensionless energy ``eta`` and
strength ``sigma``. The transmission formula is written through
``analytic_cos``/``analytic_sinc`` of ``alpha**2 = sigma**2 + eta**2`` and
``beta**2 = sigma**2 - eta**2``, so it is valid without branching for
eta below, at and above sigma.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._roots import bisect
from .transfer import analytic_cos, analytic_sinc

__all__ = [
    "AuxiliaryPair",
    "ResonanceLevel",
    "transmission_closed_form",
    "resonance_levels",
    "resonance_sigmas",
    "resonance_residual",
    "resonance_transmission",
    "jump_ratio_sq",
]


@dataclass(frozen=True)
class AuxiliaryPair:
    """Squared auxiliary arguments in the scattering convention.

    ``beta_sq`` turns negative once eta exceeds sigma.
    """

    alpha_sq: float
    beta_sq: float

    @classmethod
    def from_scattering(cls, eta, sigma) -> "AuxiliaryPair":
        e2, s2 = eta * eta, sigma * sigma
        return cls(s2 + e2, s2 - e2)


@dataclass(frozen=True)
class ResonanceLevel:
    n: int
    sigma_n: float
    T_n: float
    jump_ratio_sq: float

    @property
    def residual(self) -> float:
        return resonance_residual(self.sigma_n)


def transmission_closed_form(eta, sigma):
    """Transmission T(eta, sigma) of the barrier-well junction.

    Vectorized over broadcastable ``eta`` and ``sigma``. eta must be
    strictly positive; the eta -> 0 behaviour is only reachable as a limit.
    """
    eta = np.asarray(eta, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    if np.any(~(eta > 0)):
        raise ValueError("eta must be positive")
    if np.any(sigma < 0):
        raise ValueError("sigma must be non-negative")
    aux = AuxiliaryPair.from_scattering(eta, sigma)
    a2, b2 = aux.alpha_sq, aux.beta_sq

    cos_a = analytic_cos(a2)          # cos(alpha)
    sinc_a = analytic_sinc(a2)        # sin(alpha)/alpha
    cosh_b = analytic_cos(-b2)        # cosh(beta)
    sinhc_b = analytic_sinc(-b2)      # sinh(beta)/beta

    cc = cos_a * cosh_b
    ss = sinc_a * sinhc_b
    first = cc - a2 * ss                              # cos a cosh b - (a/b) sin a sinh b
    second = cc + b2 * ss                             # cos a cosh b + (b/a) sin a sinh b
    third = sinc_a * cosh_b + cos_a * sinhc_b         # sin a cosh b / a + cos a sinh b / b
    bracket = a2 * sinc_a * cosh_b - b2 * cos_a * sinhc_b   # a sin a cosh b - b cos a sinh b
    fourth = bracket / eta

    denom = 2.0 + first * first + second * second + (eta * third) ** 2 + fourth * fourth
    return (4.0 / denom)[()]


def resonance_residual(sigma):
    """tan(sigma) - tanh(sigma); vanishes at the transparency levels."""
    sigma = np.asarray(sigma, dtype=float)
    return (np.tan(sigma) - np.tanh(sigma))[()]


def _pole_free(sigma):
    # cos(sigma) * (tan - tanh): same zeros inside each (n pi, n pi + pi/2), no poles
    return np.sin(sigma) - np.cos(sigma) * np.tanh(sigma)


@lru_cache(maxsize=32)
def _sigmas(n_max: int) -> tuple[float, ...]:
    n = np.arange(1, n_max + 1, dtype=float)
    lo = n * math.pi
    hi = lo + 0.5 * math.pi
    roots = bisect(_pole_free, lo, hi, xtol=1e-15)
    return tuple(float(r) for r in roots)


def resonance_sigmas(n_max: int) -> np.ndarray:
    """sigma_1 ... sigma_{n_max}, the positive roots of tan(sigma) = tanh(sigma)."""
    if int(n_max) != n_max or n_max < 1:
        raise ValueError("n_max must be a positive integer")
    return np.array(_sigmas(int(n_max)))


def resonance_levels(n_max: int) -> list[ResonanceLevel]:
    """The first ``n_max`` transparency levels with their limiting T and jump ratio.

    The root for level n is the unique one in (n pi, n pi + pi/2); the
    trivial root sigma = 0 is not included.
    """
    sig = resonance_sigmas(n_max)
    return [
        ResonanceLevel(n=i + 1, sigma_n=float(s), T_n=float(resonance_transmission(s)), jump_ratio_sq=float(jump_ratio_sq(s)))
        for i, s in enumerate(sig)
    ]


def resonance_transmission(sigma_n):
    """Limit of T as eta -> 0 at a level: 1 - tanh(sigma)**4.

    Evaluated as sech^2 (1 + tanh^2) to keep relative accuracy when the
    value is tiny.
    """
    s = np.asarray(sigma_n, dtype=float)
    t = np.tanh(s)
    sech2 = 1.0 / np.cosh(s) ** 2
    return (sech2 * (1.0 + t * t))[()]


def jump_ratio_sq(sigma_n):
    """Squared ratio |psi_barrier / psi_well|^2 across the junction, always below 1."""
    s = np.asarray(sigma_n, dtype=float)
    t = np.tanh(s)
    sech2 = 1.0 / np.cosh(s) ** 2
    return (sech2 / (1.0 + t * t))[()]
