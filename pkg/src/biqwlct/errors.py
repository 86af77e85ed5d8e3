"""Typed errors shared across the package."""


class BiqwlctError(Exception):
    """Base class for all package errors."""


class NotOrthogonal(BiqwlctError):
    """Decomposition basis roots are not orthogonal."""


class NotARoot(BiqwlctError):
    """Value does not square to -1 within tolerance."""


class DegenerateB(BiqwlctError):
    """LCT matrix has |b| below the supported threshold (Dirac branch)."""


class GridMismatch(BiqwlctError):
    """Grids or lattice alignment do not match the operation's contract."""


class ZeroWindow(BiqwlctError):
    """Window function has (numerically) zero norm."""
