"""Energy and moment functionals, signal generators, uncertainty checks.

All quadratures use the same uniform Riemann weights as the transforms,
so the theorem identities close at lattice level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GridMismatch
from .grids import Field2D, GridSpec, WlctField, dual_grid_2d
from .hypercomplex import bq_conjugate, bq_multiply, bq_norm_sq
from .transforms import TransformConfig, biqwlct, rbiqlct_direct, rbiqlct_fast

__all__ = [
    "energy",
    "scalar_inner",
    "second_moment",
    "wlct_frequency_moment",
    "make_gaussian",
    "make_haar_window",
    "make_impulse",
    "make_random_field",
    "make_bandlimited_field",
    "UncertaintyReport",
    "uncertainty_check",
    "lct_moment_bound_sides",
]


# -- integral functionals ----------------------------------------------


def energy(f: Field2D) -> float:
    """sum |f|^2 * cell area (squared L2 norm on the lattice)."""
    return float(np.sum(bq_norm_sq(f.values)) * f.grid.cell_area)


def scalar_inner(f: Field2D, g: Field2D) -> float:
    """sum Re[f conj(g)]_0 * cell area; symmetric in f, g."""
    if not f.grid.close_to(g.grid):
        raise GridMismatch("inner product requires matching grids")
    prod = bq_multiply(f.values, bq_conjugate(g.values, "biquaternion"))
    return float(np.sum(prod[..., 0].real) * f.grid.cell_area)


def second_moment(f: Field2D, axis: int) -> float:
    """sum xi_k^2 |f|^2 * cell area along the chosen axis."""
    x = f.grid.coords(axis)
    w = x ** 2
    dens = bq_norm_sq(f.values)
    if axis == 1:
        return float(np.sum(w[:, None] * dens) * f.grid.cell_area)
    return float(np.sum(w[None, :] * dens) * f.grid.cell_area)


def wlct_frequency_moment(w: WlctField, axis: int) -> float:
    """Quadruple sum of omega_k^2 |W|^2 with full quadrature weights."""
    om = w.omega_grid.coords(axis) ** 2
    dens = bq_norm_sq(w.values)
    if axis == 1:
        return float(np.sum(om[:, None, None, None] * dens) * w.cell_weight)
    return float(np.sum(om[None, :, None, None] * dens) * w.cell_weight)


# -- signal generators -------------------------------------------------


def make_gaussian(c0: complex, alpha1: float, alpha2: float, grid: GridSpec) -> Field2D:
    """c0 * exp(-(alpha1 xi1^2 + alpha2 xi2^2)); scalar-valued field."""
    if alpha1 <= 0 or alpha2 <= 0:
        raise ValueError("alpha1 and alpha2 must be positive")
    x1 = grid.coords(1)
    x2 = grid.coords(2)
    env = np.exp(-(alpha1 * x1[:, None] ** 2 + alpha2 * x2[None, :] ** 2))
    return Field2D.from_scalar(grid, c0 * env)


def _haar_1d(x: np.ndarray) -> np.ndarray:
    """Snap near-breakpoint floats to exact half-integers, then classify."""
    snapped = np.round(x * 2.0) / 2.0
    x = np.where(np.abs(x - snapped) < 1e-9, snapped, x)
    lower = (0.0 <= x) & (x < 0.5)
    upper = (0.5 <= x) & (x < 1.0)
    return lower, upper


def make_haar_window(grid: GridSpec) -> Field2D:
    """Two-dimensional Haar step window.

    +1 on [0, 1/2) x [0, 1/2), -1 on [1/2, 1) x [1/2, 1), 0 elsewhere,
    with the half-open convention that a sample on a breakpoint takes the
    right-interval value.  The grid spacing must divide 1/2 so the
    breakpoints land on lattice edges.
    """
    for delta in (grid.delta1, grid.delta2):
        ratio = 0.5 / delta
        if abs(ratio - round(ratio)) > 1e-9:
            raise GridMismatch(f"spacing {delta} does not divide 1/2")
    lo1, hi1 = _haar_1d(grid.coords(1))
    lo2, hi2 = _haar_1d(grid.coords(2))
    vals = (lo1[:, None] & lo2[None, :]).astype(np.float64)
    vals -= (hi1[:, None] & hi2[None, :]).astype(np.float64)
    return Field2D.from_scalar(grid, vals)


def make_impulse(grid: GridSpec, value: complex = 1.0,
                 at: tuple[float, float] = (0.0, 0.0)) -> Field2D:
    """Single nonzero sample at the lattice point nearest ``at``."""
    i1 = int(np.clip(round((at[0] - grid.origin1) / grid.delta1), 0, grid.n1 - 1))
    i2 = int(np.clip(round((at[1] - grid.origin2) / grid.delta2), 0, grid.n2 - 1))
    f = Field2D.zeros(grid)
    f.values[i1, i2, 0] = value
    return f


def make_random_field(grid: GridSpec, seed: int, envelope: float | None = None) -> Field2D:
    """Standard normal draws in all 8 real coordinates, Gaussian tapered.

    The broad envelope suppresses truncation artifacts so moments stay
    finite-looking on the grid; ``envelope`` defaults to a third of the
    half-extent.
    """
    rng = np.random.default_rng(seed)
    vals = rng.standard_normal((grid.n1, grid.n2, 4)) \
        + 1j * rng.standard_normal((grid.n1, grid.n2, 4))
    x1 = grid.coords(1)
    x2 = grid.coords(2)
    if envelope is None:
        envelope = max(abs(x1[0]), abs(x1[-1]), abs(x2[0]), abs(x2[-1])) / 3.0
    taper = np.exp(-(x1[:, None] ** 2 + x2[None, :] ** 2) / (2.0 * envelope ** 2))
    return Field2D(grid, vals * taper[..., None])


def make_bandlimited_field(grid: GridSpec, seed: int, max_mode: int | None = None) -> Field2D:
    """Grid-periodic bandlimited field: a few lattice harmonics per coefficient."""
    rng = np.random.default_rng(seed)
    if max_mode is None:
        max_mode = min(grid.n1, grid.n2) // 4
    i1 = np.arange(grid.n1)[:, None]
    i2 = np.arange(grid.n2)[None, :]
    vals = np.zeros((grid.n1, grid.n2, 4), dtype=np.complex128)
    for _ in range(6):
        k1 = int(rng.integers(-max_mode, max_mode + 1))
        k2 = int(rng.integers(-max_mode, max_mode + 1))
        coeff = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        wave = np.exp(2j * np.pi * (k1 * i1 / grid.n1 + k2 * i2 / grid.n2))
        vals += wave[..., None] * coeff
    return Field2D(grid, vals)


# -- uncertainty functionals -------------------------------------------


@dataclass
class UncertaintyReport:
    """Both sides of the windowed-transform uncertainty inequality.

    ``rhs`` carries the displayed normalisation (b_k/4) ||f||^2 ||phi||^2;
    ``rhs_single_norm`` the proof's final form with a single power of
    ||phi||.  Both are recorded because the source derivation disagrees
    with its own displayed statement; ``satisfied`` flags follow
    lhs >= rhs - 1e-12.
    """

    axis: int
    lhs: float
    rhs: float
    satisfied: bool
    margin: float
    rhs_single_norm: float
    satisfied_single_norm: bool
    margin_single_norm: float


def uncertainty_check(f: Field2D, window: Field2D, cfg: TransformConfig,
                      axis: int, periodic: bool = True) -> UncertaintyReport:
    """Evaluate the spread product against (b_k/4) energy bounds.

    lhs = sqrt(frequency moment of the windowed transform) *
    sqrt(spatial second moment of f).  The nu lattice covers the full
    signal grid (wrapped by default) so the window-energy bookkeeping of
    the bound holds at lattice level.
    """
    w = biqwlct(f, window, cfg, periodic=periodic)
    lhs = math.sqrt(wlct_frequency_moment(w, axis)) * math.sqrt(second_moment(f, axis))
    b = cfg.m1.b if axis == 1 else cfg.m2.b
    ef = energy(f)
    ew = energy(window)
    rhs = (b / 4.0) * ef * ew
    rhs_single = (b / 4.0) * ef * math.sqrt(ew)
    tol = 1e-12
    return UncertaintyReport(
        axis=axis,
        lhs=lhs,
        rhs=rhs,
        satisfied=lhs >= rhs - tol,
        margin=lhs - rhs,
        rhs_single_norm=rhs_single,
        satisfied_single_norm=lhs >= rhs_single - tol,
        margin_single_norm=lhs - rhs_single,
    )


def lct_moment_bound_sides(f: Field2D, cfg: TransformConfig, axis: int,
                           fast: bool = True) -> tuple[float, float]:
    """Sides of the unwindowed moment inequality.

    Returns (spatial moment * frequency moment of the transform,
    ((b_k/2) * energy)^2).  The frequency moment is taken over the dual
    grid of f.
    """
    if fast:
        big_f = rbiqlct_fast(f, cfg)
    else:
        big_f = rbiqlct_direct(f, cfg, dual_grid_2d(f.grid, cfg.m1, cfg.m2))
    lhs = second_moment(f, axis) * second_moment(big_f, axis)
    b = cfg.m1.b if axis == 1 else cfg.m2.b
    rhs = ((b / 2.0) * energy(f)) ** 2
    return lhs, rhs
