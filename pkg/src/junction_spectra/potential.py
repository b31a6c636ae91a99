"""Piecewise-constant potentials on the line.

Units: hbar^2/2m = 1 and the regularization length is fixed to 1, so a
slab of height ``h`` enters the Schrodinger equation as ``-psi'' + h psi =
E psi``. The potential vanishes identically outside ``[x_left, x_right]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

__all__ = [
    "MAX_SIGMA",
    "Slab",
    "DeltaScatterer",
    "PiecewisePotential",
    "build_barrier_well",
    "build_double_delta",
    "free_potential",
]

#: Largest interaction strength the solvers are validated for. Beyond it the
#: transfer-matrix entries grow like exp(sigma) and products approach the
#: limits of double precision.
MAX_SIGMA = 25.0


@dataclass(frozen=True)
class Slab:
    """Constant potential ``height`` over an interval of length ``width``."""

    width: float
    height: float

    def __post_init__(self):
        if not (math.isfinite(self.width) and self.width > 0):
            raise ValueError(f"slab width must be positive and finite, got {self.width!r}")
        if not math.isfinite(self.height):
            raise ValueError(f"slab height must be finite, got {self.height!r}")


@dataclass(frozen=True)
class DeltaScatterer:
    """Point scatterer ``strength * delta(x - position)``."""

    position: float
    strength: float

    def __post_init__(self):
        if not math.isfinite(self.position):
            raise ValueError(f"delta position must be finite, got {self.position!r}")
        if not math.isfinite(self.strength):
            raise ValueError(f"delta strength must be finite, got {self.strength!r}")


@dataclass(frozen=True)
class PiecewisePotential:
    """Contiguous slabs starting at ``x_left`` plus point scatterers.

    Slabs are laid end to end in the given order, so contiguity holds by
    construction. Every scatterer must sit inside the support or on its
    boundary. Sequences are stored as tuples; instances are immutable.
    """

    slabs: tuple[Slab, ...] = ()
    x_left: float = 0.0
    deltas: tuple[DeltaScatterer, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "slabs", tuple(self.slabs))
        object.__setattr__(self, "deltas", tuple(sorted(self.deltas, key=lambda d: d.position)))
        if not math.isfinite(self.x_left):
            raise ValueError("x_left must be finite")
        for s in self.slabs:
            if not isinstance(s, Slab):
                raise TypeError(f"expected Slab, got {type(s).__name__}")
        lo, hi = self.x_left, self.x_right
        for d in self.deltas:
            if not isinstance(d, DeltaScatterer):
                raise TypeError(f"expected DeltaScatterer, got {type(d).__name__}")
            if not (lo <= d.position <= hi):
                raise ValueError(
                    f"delta at x={d.position} lies outside the support [{lo}, {hi}]"
                )

    @property
    def width(self) -> float:
        return math.fsum(s.width for s in self.slabs)

    @property
    def x_right(self) -> float:
        return self.x_left + self.width

    def boundaries(self) -> list[float]:
        """Slab edges from ``x_left`` to ``x_right`` inclusive."""
        edges = [self.x_left]
        acc = self.x_left
        for s in self.slabs:
            acc += s.width
            edges.append(acc)
        return edges

    def integral(self) -> float:
        """Integral of V over the line, delta strengths included."""
        return math.fsum([s.width * s.height for s in self.slabs] + [d.strength for d in self.deltas])

    def mirrored(self) -> "PiecewisePotential":
        """The potential V(-x)."""
        return PiecewisePotential(
            slabs=tuple(reversed(self.slabs)),
            x_left=-self.x_right,
            deltas=tuple(DeltaScatterer(-d.position, d.strength) for d in self.deltas),
        )

    def negated(self) -> "PiecewisePotential":
        """The potential -V(x)."""
        return PiecewisePotential(
            slabs=tuple(Slab(s.width, -s.height) for s in self.slabs),
            x_left=self.x_left,
            deltas=tuple(DeltaScatterer(d.position, -d.strength) for d in self.deltas),
        )

    def split(self, index: int, fraction: float) -> "PiecewisePotential":
        """Copy with slab ``index`` cut in two at ``fraction`` of its width."""
        if not 0.0 < fraction < 1.0:
            raise ValueError("fraction must lie strictly between 0 and 1")
        s = self.slabs[index]
        parts = (Slab(s.width * fraction, s.height), Slab(s.width * (1.0 - fraction), s.height))
        slabs = self.slabs[:index] + parts + self.slabs[index + 1 :]
        return PiecewisePotential(slabs=slabs, x_left=self.x_left, deltas=self.deltas)


def _check_sigma(sigma: float) -> float:
    sigma = float(sigma)
    if not math.isfinite(sigma) or sigma < 0:
        raise ValueError(f"sigma must be a non-negative finite number, got {sigma!r}")
    if sigma > MAX_SIGMA:
        raise ValueError(f"sigma={sigma} exceeds the supported range sigma <= {MAX_SIGMA}")
    return sigma


def free_potential(width: float = 1.0, x_left: float = 0.0) -> PiecewisePotential:
    """A single zero-height slab; scattering through it is trivial."""
    return PiecewisePotential(slabs=(Slab(width, 0.0),), x_left=x_left)


def build_barrier_well(sigma: float) -> PiecewisePotential:
    """Barrier of height sigma**2 on (-1, 0) followed by a well of depth sigma**2 on (0, 1)."""
    sigma = _check_sigma(sigma)
    h = sigma * sigma
    return PiecewisePotential(slabs=(Slab(1.0, h), Slab(1.0, -h)), x_left=-1.0)


def build_double_delta(sigma: float) -> PiecewisePotential:
    """Scatterers +sigma**2/2 at x = -1 and -sigma**2/2 at x = +1, free in between.

    This member of the regularizing family vanishes near the origin; for
    sigma = 0 no scatterers are placed.
    """
    sigma = _check_sigma(sigma)
    g = 0.5 * sigma * sigma
    deltas: Sequence[DeltaScatterer] = ()
    if g > 0:
        deltas = (DeltaScatterer(-1.0, g), DeltaScatterer(1.0, -g))
    return PiecewisePotential(slabs=(Slab(2.0, 0.0),), x_left=-1.0, deltas=tuple(deltas))
