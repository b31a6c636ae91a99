"""Exact transfer-matrix solver for piecewise-constant potentials.

Matrices act on the real pair (psi, psi') and are built from the entire
functions ``analytic_cos(u)`` and ``analytic_sinc(u)`` of the squared
argument, so energies above, below and exactly at a slab height share one
code path. Energies may be numpy arrays; entries then broadcast.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from ._roots import scan_roots
from .potential import DeltaScatterer, PiecewisePotential, Slab

__all__ = [
    "analytic_cos",
    "analytic_sinc",
    "TransferMatrix",
    "ScatteringResult",
    "slab_matrix",
    "delta_matrix",
    "total_matrix",
    "scatter",
    "transmission",
    "evaluate_scattering_wavefunction",
    "bound_state_mismatch",
    "find_bound_states_numeric",
]

_SERIES_CUT = 1e-6


def analytic_cos(u):
    """cos(sqrt(u)) for u >= 0 and cosh(sqrt(-u)) for u < 0."""
    u = np.asarray(u, dtype=float)
    r = np.sqrt(np.abs(u))
    return np.where(u >= 0, np.cos(r), np.cosh(r))[()]


def analytic_sinc(u):
    """sin(sqrt(u))/sqrt(u), continued to sinh(sqrt(-u))/sqrt(-u); equals 1 at u = 0."""
    u = np.asarray(u, dtype=float)
    r = np.sqrt(np.abs(u))
    small = r < _SERIES_CUT
    rs = np.where(small, 1.0, r)
    val = np.where(u >= 0, np.sin(rs), np.sinh(rs)) / rs
    return np.where(small, 1.0 - u / 6.0, val)[()]


@dataclass(frozen=True)
class TransferMatrix:
    """Maps (psi, psi') at the left edge of a region to the right edge.

    ``A @ B`` is the propagator through B first, then A.
    """

    m11: float
    m12: float
    m21: float
    m22: float

    @classmethod
    def identity(cls) -> "TransferMatrix":
        return cls(1.0, 0.0, 0.0, 1.0)

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        return TransferMatrix(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    @property
    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, psi, dpsi):
        return self.m11 * psi + self.m12 * dpsi, self.m21 * psi + self.m22 * dpsi

    def as_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]])


@dataclass(frozen=True)
class ScatteringResult:
    """Amplitudes for unit incidence from either side at ``energy_eta``.

    Phases refer to plane waves exp(+-i eta x) in absolute coordinates.
    """

    energy_eta: float
    t_left: complex
    r_left: complex
    t_right: complex
    r_right: complex
    T: float
    R: float


def slab_matrix(slab: Slab, energy) -> TransferMatrix:
    """Propagator of psi'' = (V - E) psi across one slab."""
    w = slab.width
    k2 = np.asarray(energy, dtype=float) - slab.height
    u = k2 * w * w
    c = analytic_cos(u)
    s = analytic_sinc(u)
    return TransferMatrix(c, w * s, -k2 * w * s, c)


def delta_matrix(d: DeltaScatterer) -> TransferMatrix:
    """psi' jumps by ``strength * psi`` across the scatterer."""
    return TransferMatrix(1.0, 0.0, d.strength, 1.0)


def _segments(potential: PiecewisePotential, x_stop: float | None = None):
    """Yield slabs and deltas in order of increasing x, stopping at ``x_stop``.

    Slabs containing a delta are cut at its position; the slab containing
    ``x_stop`` is truncated there.
    """
    deltas = list(potential.deltas)
    x = potential.x_left
    di = 0
    stop = potential.x_right if x_stop is None else x_stop
    for slab in potential.slabs:
        end = x + slab.width
        while di < len(deltas) and deltas[di].position <= end and deltas[di].position <= stop:
            pos = deltas[di].position
            if pos > x:
                yield Slab(pos - x, slab.height)
                x = pos
            yield deltas[di]
            di += 1
        if end >= stop:
            if stop > x:
                yield Slab(stop - x, slab.height)
            return
        yield Slab(end - x, slab.height)
        x = end
    # scatterers at x_right, or on an empty support
    while di < len(deltas) and deltas[di].position <= stop:
        yield deltas[di]
        di += 1


def _compose(segments, energy) -> TransferMatrix:
    m = TransferMatrix.identity()
    for seg in segments:
        step = slab_matrix(seg, energy) if isinstance(seg, Slab) else delta_matrix(seg)
        m = step @ m
    return m


def total_matrix(potential: PiecewisePotential, energy) -> TransferMatrix:
    """Ordered product of slab and scatterer matrices from x_left to x_right."""
    return _compose(_segments(potential), energy)


def _plane_wave_coefficients(m: TransferMatrix, k):
    # W0^{-1} M W0 with W0 = [[1, 1], [ik, -ik]]; only three entries are needed.
    s = m.m11 + m.m22
    d = m.m11 - m.m22
    k22 = 0.5 * complex(s, m.m21 / k - k * m.m12)
    k21 = 0.5 * complex(d, k * m.m12 + m.m21 / k)
    k12 = 0.5 * complex(d, -(k * m.m12 + m.m21 / k))
    return k22, k21, k12


def _check_eta(eta) -> float:
    eta = float(eta)
    if not eta > 0:
        raise ValueError(f"eta must be positive (threshold eta = 0 is a limit), got {eta!r}")
    return eta


def scatter(potential: PiecewisePotential, eta: float) -> ScatteringResult:
    """Transmission and reflection at energy eta**2.

    Left incidence: psi = e^{i eta x} + r e^{-i eta x} left of the support and
    t e^{i eta x} right of it; right incidence is the mirror image.
    """
    k = _check_eta(eta)
    m = total_matrix(potential, k * k)
    k22, k21, k12 = _plane_wave_coefficients(m, float(k))
    xl, xr = potential.x_left, potential.x_right
    t = cmath.exp(-1j * k * (xr - xl)) / k22
    r_left = -k21 * cmath.exp(2j * k * xl) / k22
    r_right = k12 * cmath.exp(-2j * k * xr) / k22
    norm = abs(k22) ** 2
    return ScatteringResult(
        energy_eta=k,
        t_left=t,
        r_left=r_left,
        t_right=t,
        r_right=r_right,
        T=1.0 / norm,
        R=abs(k21) ** 2 / norm,
    )


def transmission(potential: PiecewisePotential, eta):
    """Transmission probability only, vectorized over ``eta``."""
    k = np.asarray(eta, dtype=float)
    if np.any(~(k > 0)):
        raise ValueError("eta must be positive")
    m = total_matrix(potential, k * k)
    re = m.m11 + m.m22
    im = m.m21 / k - k * m.m12
    return (4.0 / (re * re + im * im))[()]


def evaluate_scattering_wavefunction(
    potential: PiecewisePotential, eta: float, x: float, incidence: str = "left"
) -> complex:
    """Scattering solution at ``x`` for a unit-amplitude incident wave.

    ``incidence="left"`` sends e^{i eta x} in from -infinity; ``"right"``
    sends e^{-i eta x} in from +infinity.
    """
    if incidence not in ("left", "right"):
        raise ValueError("incidence must be 'left' or 'right'")
    res = scatter(potential, eta)
    k = res.energy_eta
    xl, xr = potential.x_left, potential.x_right
    if incidence == "left":
        if x <= xl:
            return cmath.exp(1j * k * x) + res.r_left * cmath.exp(-1j * k * x)
        if x >= xr:
            return res.t_left * cmath.exp(1j * k * x)
        e_in, e_out = cmath.exp(1j * k * xl), cmath.exp(-1j * k * xl)
        psi = e_in + res.r_left * e_out
        dpsi = 1j * k * (e_in - res.r_left * e_out)
    else:
        if x <= xl:
            return res.t_right * cmath.exp(-1j * k * x)
        if x >= xr:
            return cmath.exp(-1j * k * x) + res.r_right * cmath.exp(1j * k * x)
        psi = res.t_right * cmath.exp(-1j * k * xl)
        dpsi = -1j * k * psi
    m = _compose(_segments(potential, x_stop=x), k * k)
    return complex(m.m11 * psi + m.m12 * dpsi)


def bound_state_mismatch(potential: PiecewisePotential, zeta):
    """F(zeta) = m21 + zeta (m11 + m22) + zeta^2 m12 at energy -zeta^2.

    Zero exactly when e^{zeta x} on the left continues into e^{-zeta x} on
    the right. Accepts arrays of zeta.
    """
    zeta = np.asarray(zeta, dtype=float)
    if np.any(zeta <= 0):
        raise ValueError("zeta must be positive")
    m = total_matrix(potential, -zeta * zeta)
    return (m.m21 + zeta * (m.m11 + m.m22) + zeta * zeta * m.m12)[()]


def find_bound_states_numeric(
    potential: PiecewisePotential,
    zeta_max: float,
    step: float | None = None,
    zeta_min: float = 1e-6,
) -> list[float]:
    """Every root of :func:`bound_state_mismatch` in (zeta_min, zeta_max), ascending.

    The default grid step is ``1e-3 * zeta_max``. A cell hiding two roots
    triggers a :class:`~junction_spectra._roots.RootPairWarning`.
    """
    if not zeta_max > 0:
        raise ValueError("zeta_max must be positive")
    if step is None:
        step = 1e-3 * zeta_max
    n = max(2, int(np.ceil((zeta_max - zeta_min) / step)) + 1)
    grid = np.linspace(zeta_min, zeta_max, n)
    roots = scan_roots(lambda z: bound_state_mismatch(potential, z), grid)
    return [float(z) for z in roots]
