"""Bracketing root finders shared by the spectral solvers."""
from __future__ import annotations

import warnings
from typing import Callable

import numpy as np


class RootPairWarning(UserWarning):
    """A scan cell contained two roots that the coarse grid could not separate."""


def bisect(f: Callable[[np.ndarray], np.ndarray], lo, hi, xtol: float = 1e-14, maxiter: int = 200) -> np.ndarray:
    """Vectorized bisection on the brackets ``[lo[i], hi[i]]``.

    ``f`` must accept and return arrays. Each bracket must hold a sign change
    (or an exact zero at an endpoint). Iteration stops once every interval is
    narrower than ``xtol * |x|`` or can no longer be split.
    """
    lo = np.array(lo, dtype=float, ndmin=1)
    hi = np.array(hi, dtype=float, ndmin=1)
    if lo.size == 0:
        return lo
    flo = np.asarray(f(lo), dtype=float)
    fhi = np.asarray(f(hi), dtype=float)
    if np.any(flo * fhi > 0):
        raise ValueError("bisect: bracket without a sign change")
    done_lo = flo == 0
    for _ in range(maxiter):
        width = hi - lo
        mid = lo + 0.5 * width
        if np.all((width <= xtol * np.maximum(np.abs(lo), np.abs(hi))) | (mid == lo) | (mid == hi)):
            break
        fmid = np.asarray(f(mid), dtype=float)
        left = np.sign(fmid) == np.sign(flo)
        lo = np.where(left, mid, lo)
        flo = np.where(left, fmid, flo)
        hi = np.where(left, hi, mid)
    root = 0.5 * (lo + hi)
    root = np.where(done_lo, lo, root)
    return root


def _sign_change_cells(values: np.ndarray) -> np.ndarray:
    s = np.sign(values)
    # an exact zero on a grid node is attributed to the cell on its right
    s = np.where(s == 0, 1.0, s)
    return np.nonzero(s[:-1] * s[1:] < 0)[0]


def scan_roots(f: Callable[[np.ndarray], np.ndarray], grid, xtol: float = 1e-14) -> np.ndarray:
    """All roots of ``f`` on ``grid`` located by sign changes, then bisection.

    A refinement pass evaluates ``f`` at the cell midpoints. If the doubled
    grid shows more sign changes than the coarse one, some cell hid a root
    pair; a :class:`RootPairWarning` is issued and the refined grid is used.
    """
    grid = np.asarray(grid, dtype=float)
    values = np.asarray(f(grid), dtype=float)
    cells = _sign_change_cells(values)

    mids = 0.5 * (grid[:-1] + grid[1:])
    fine = np.empty(2 * grid.size - 1)
    fine[0::2] = grid
    fine[1::2] = mids
    fine_vals = np.empty_like(fine)
    fine_vals[0::2] = values
    fine_vals[1::2] = np.asarray(f(mids), dtype=float)
    fine_cells = _sign_change_cells(fine_vals)
    if fine_cells.size > cells.size:
        warnings.warn(
            f"scan grid too coarse: {fine_cells.size - cells.size} extra sign change(s) "
            "found on the refined grid",
            RootPairWarning,
            stacklevel=2,
        )
        grid, cells = fine, fine_cells
    return bisect(f, grid[cells], grid[cells + 1], xtol=xtol)
