"""Uniform 2-D sampling lattices and biquaternion-valued fields."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GridMismatch
from .kernels import LctParam

__all__ = ["GridSpec", "Field2D", "WlctField", "dual_grid", "dual_grid_2d"]

LATTICE_TOL = 1e-9


@dataclass(frozen=True)
class GridSpec:
    """Uniform lattice: coordinates xi_k(i) = origin_k + i * delta_k."""

    n1: int
    n2: int
    origin1: float
    origin2: float
    delta1: float
    delta2: float

    def __post_init__(self):
        if self.n1 < 2 or self.n2 < 2:
            raise ValueError("need at least 2 samples per axis")
        if self.delta1 <= 0 or self.delta2 <= 0:
            raise ValueError("sample spacing must be positive")

    @classmethod
    def centered(cls, n1: int, n2: int, delta1: float, delta2: float) -> "GridSpec":
        """Grid symmetric about 0 in the DFT sense (origin = -(n//2) * delta)."""
        return cls(n1, n2, -(n1 // 2) * delta1, -(n2 // 2) * delta2, delta1, delta2)

    def coords(self, axis: int) -> np.ndarray:
        if axis == 1:
            return self.origin1 + self.delta1 * np.arange(self.n1)
        if axis == 2:
            return self.origin2 + self.delta2 * np.arange(self.n2)
        raise ValueError("axis must be 1 or 2")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n1, self.n2)

    @property
    def cell_area(self) -> float:
        return self.delta1 * self.delta2

    def close_to(self, other: "GridSpec", tol: float = LATTICE_TOL) -> bool:
        return (self.shape == other.shape
                and abs(self.origin1 - other.origin1) <= tol
                and abs(self.origin2 - other.origin2) <= tol
                and abs(self.delta1 - other.delta1) <= tol
                and abs(self.delta2 - other.delta2) <= tol)

    def index_of(self, x1: float, x2: float) -> tuple[int, int]:
        """Lattice indices of a point, or GridMismatch if off-lattice."""
        f1 = (x1 - self.origin1) / self.delta1
        f2 = (x2 - self.origin2) / self.delta2
        i1, i2 = round(f1), round(f2)
        if abs(f1 - i1) > LATTICE_TOL or abs(f2 - i2) > LATTICE_TOL:
            raise GridMismatch(f"point ({x1}, {x2}) is not on the lattice")
        return int(i1), int(i2)


@dataclass
class Field2D:
    """Biquaternion value per lattice site; values shape (n1, n2, 4) complex."""

    grid: GridSpec
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.values.shape != (self.grid.n1, self.grid.n2, 4):
            raise ValueError(
                f"values shape {self.values.shape} does not match grid "
                f"{(self.grid.n1, self.grid.n2, 4)}")
        if not np.all(np.isfinite(self.values.view(np.float64))):
            raise ValueError("field contains non-finite entries")

    @classmethod
    def zeros(cls, grid: GridSpec) -> "Field2D":
        return cls(grid, np.zeros((grid.n1, grid.n2, 4), dtype=np.complex128))

    @classmethod
    def from_scalar(cls, grid: GridSpec, scalar_values: np.ndarray) -> "Field2D":
        """Field with the given complex scalar part and zero vector part."""
        v = np.zeros((grid.n1, grid.n2, 4), dtype=np.complex128)
        v[..., 0] = scalar_values
        return cls(grid, v)

    def copy(self) -> "Field2D":
        return Field2D(self.grid, self.values.copy())


@dataclass
class WlctField:
    """Windowed-transform output indexed by (omega1, omega2, nu1, nu2)."""

    omega_grid: GridSpec
    nu_grid: GridSpec
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.complex128)
        expected = (self.omega_grid.n1, self.omega_grid.n2,
                    self.nu_grid.n1, self.nu_grid.n2, 4)
        if self.values.shape != expected:
            raise ValueError(f"values shape {self.values.shape} != {expected}")
        if not np.all(np.isfinite(self.values.view(np.float64))):
            raise ValueError("field contains non-finite entries")

    @property
    def cell_weight(self) -> float:
        """Quadrature weight d(omega1) d(omega2) d(nu1) d(nu2)."""
        return self.omega_grid.cell_area * self.nu_grid.cell_area


def _dual_axis(n: int, delta: float, b: float) -> tuple[float, float]:
    d_omega = 2.0 * np.pi * abs(b) / (n * delta)
    origin = -(n // 2) * d_omega
    return origin, d_omega


def dual_grid(g: GridSpec, m: LctParam, axis: int) -> GridSpec:
    """Frequency lattice for one axis: n unchanged, spacing 2 pi |b| / (n delta).

    The origin is chosen symmetric about 0 (DFT convention).  This pairing
    makes the chirp-DFT core of the fast path exactly invertible on the
    lattice.  Apply once per axis for the full dual grid.
    """
    m.require_nondegenerate()
    if axis == 1:
        o, d = _dual_axis(g.n1, g.delta1, m.b)
        return GridSpec(g.n1, g.n2, o, g.origin2, d, g.delta2)
    if axis == 2:
        o, d = _dual_axis(g.n2, g.delta2, m.b)
        return GridSpec(g.n1, g.n2, g.origin1, o, g.delta1, d)
    raise ValueError("axis must be 1 or 2")


def dual_grid_2d(g: GridSpec, m1: LctParam, m2: LctParam) -> GridSpec:
    """Dual grid over both axes (axis 1 with m1, axis 2 with m2)."""
    return dual_grid(dual_grid(g, m1, 1), m2, 2)
