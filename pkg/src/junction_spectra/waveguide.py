"""TE modes of the antisymmetric dielectric step layer.

The permittivity is eps_b - eps_m on [-a, 0), eps_b + eps_m on (0, a] and
eps_b elsewhere. For the field E(x) exp(i q z) at free-space wave number k,
rescaling x by a turns the mode equation into the barrier-well problem
with

    sigma = k a sqrt(eps_m),
    eta   = a sqrt(k^2 eps_b - q^2)    (continuum, q < k sqrt(eps_b)),
    zeta  = a sqrt(q^2 - k^2 eps_b)    (guided,    q > k sqrt(eps_b)).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

from .junction import resonance_sigmas, transmission_closed_form
from .spectrum import bound_state_zeta

__all__ = [
    "WaveguideConfig",
    "ModePoint",
    "MappedParameters",
    "DispersionCurve",
    "TransverseTransmission",
    "EmptyCurveError",
    "map_parameters",
    "unmap_parameters",
    "cutoff_points",
    "dispersion_curve",
    "sector_of",
    "transverse_transmission",
]

# relative tolerance for deciding that a point sits on line 1 or line 2
LINE_RTOL = 1e-12


class EmptyCurveError(ValueError):
    """No requested wave number lies above the cut-off of the mode."""


@dataclass(frozen=True)
class WaveguideConfig:
    a: float
    eps_b: float
    eps_m: float

    def __post_init__(self):
        for name in ("a", "eps_b", "eps_m"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")
        if self.eps_b - self.eps_m <= 0:
            warnings.warn(
                "eps_b <= eps_m: the low-permittivity side is not propagating, sector II is empty",
                stacklevel=2,
            )

    def line1(self, k: float) -> float:
        """q on the cut-off line q = k sqrt(eps_b)."""
        return k * math.sqrt(self.eps_b)

    def line2(self, k: float) -> float | None:
        """q on the sector boundary q = k sqrt(eps_b - eps_m), or None if it does not exist."""
        d = self.eps_b - self.eps_m
        return k * math.sqrt(d) if d > 0 else None


@dataclass(frozen=True)
class ModePoint:
    k: float
    q: float

    def __post_init__(self):
        if self.k < 0 or self.q < 0:
            raise ValueError("k and q must be non-negative")


@dataclass(frozen=True)
class MappedParameters:
    """sigma plus either eta (scattering), zeta (guided) or neither (threshold)."""

    sigma: float
    regime: str
    eta: float | None = None
    zeta: float | None = None


class TransverseTransmission(NamedTuple):
    T: float
    sector: str
    eta: float
    sigma: float


@dataclass
class DispersionCurve:
    """Guided branch n; ``below_cutoff`` lists the wave numbers that were skipped."""

    n: int
    points: list[ModePoint] = field(default_factory=list)
    below_cutoff: list[float] = field(default_factory=list)


def map_parameters(config: WaveguideConfig, point: ModePoint) -> MappedParameters:
    a, k, q = config.a, point.k, point.q
    sigma = k * a * math.sqrt(config.eps_m)
    line = k * k * config.eps_b
    gap = line - q * q
    if abs(gap) <= LINE_RTOL * max(line, q * q):
        return MappedParameters(sigma, "threshold")
    if gap > 0:
        return MappedParameters(sigma, "scattering", eta=a * math.sqrt(gap))
    return MappedParameters(sigma, "guided", zeta=a * math.sqrt(-gap))


def unmap_parameters(config: WaveguideConfig, mapped: MappedParameters) -> ModePoint:
    """Inverse of :func:`map_parameters`."""
    k = mapped.sigma / (config.a * math.sqrt(config.eps_m))
    q2 = k * k * config.eps_b
    if mapped.regime == "scattering":
        q2 -= (mapped.eta / config.a) ** 2
    elif mapped.regime == "guided":
        q2 += (mapped.zeta / config.a) ** 2
    elif mapped.regime != "threshold":
        raise ValueError(f"unknown regime {mapped.regime!r}")
    return ModePoint(k, math.sqrt(max(q2, 0.0)))


def cutoff_points(config: WaveguideConfig, n_max: int) -> list[tuple[float, float]]:
    """(k_n, q_n^0) for n = 1..n_max: where guided mode n leaves the continuum."""
    out = []
    for s in resonance_sigmas(n_max):
        k = float(s) / (config.a * math.sqrt(config.eps_m))
        q = (float(s) / config.a) * math.sqrt(config.eps_b / config.eps_m)
        out.append((k, q))
    return out


def dispersion_curve(config: WaveguideConfig, n: int, k_samples) -> DispersionCurve:
    """q_n(k) = sqrt(k^2 eps_b + zeta_n(k a sqrt(eps_m))^2 / a^2) on the given k."""
    curve = DispersionCurve(n)
    root_m = math.sqrt(config.eps_m)
    for k in k_samples:
        k = float(k)
        zeta = bound_state_zeta(k * config.a * root_m, n) if k > 0 else None
        if zeta is None:
            curve.below_cutoff.append(k)
            continue
        q = math.sqrt(k * k * config.eps_b + (zeta / config.a) ** 2)
        curve.points.append(ModePoint(k, q))
    if not curve.points:
        raise EmptyCurveError(f"mode {n} has no samples above its cut-off")
    return curve


def sector_of(config: WaveguideConfig, point: ModePoint) -> str:
    """'I' above line 2, 'II' below it, 'boundary' on it (continuum points only)."""
    d = config.eps_b - config.eps_m
    line = point.k * point.k * d
    gap = point.q * point.q - line
    if abs(gap) <= LINE_RTOL * max(abs(line), point.q * point.q, point.k * point.k * config.eps_b):
        return "boundary"
    return "I" if gap > 0 else "II"


def transverse_transmission(config: WaveguideConfig, point: ModePoint) -> TransverseTransmission:
    """Transmission across the layer for a continuum point, with its sector."""
    mapped = map_parameters(config, point)
    if mapped.regime != "scattering":
        raise ValueError(
            f"point (k={point.k}, q={point.q}) is {mapped.regime}, not in the continuum; "
            "use dispersion_curve for guided modes"
        )
    T = float(transmission_closed_form(mapped.eta, mapped.sigma))
    return TransverseTransmission(T, sector_of(config, point), mapped.eta, mapped.sigma)
