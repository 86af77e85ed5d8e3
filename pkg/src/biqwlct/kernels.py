"""LCT matrix parameters and pointwise kernel evaluation (b != 0 branch).

A transform axis is governed by a real 2x2 matrix [[a, b], [c, d]] with
determinant 1.  The kernel for that axis is

    K(xi, omega) = (2 pi |b|)^(-1/2) * exp(mu * phi(xi, omega)),
    phi = (a/2b) xi^2 - xi omega / b + (d/2b) omega^2 - pi/4,

with mu any biquaternion root of -1.  The phase is real, so the
exponential reduces to cos(phi) + mu sin(phi).

The b = 0 Dirac branch is rejected with :class:`DegenerateB`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateB
from .hypercomplex import RootOfMinusOne, bq_exp_unit

__all__ = ["LctParam", "kernel_phase", "kernel_eval", "kernel_eval_inverse"]

DET_TOL = 1e-12
B_MIN = 1e-12


@dataclass(frozen=True)
class LctParam:
    """Parameter matrix [[a, b], [c, d]] with det = 1."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if not math.isfinite(det) or abs(det - 1.0) > DET_TOL:
            raise ValueError(f"determinant must be 1, got {det!r}")

    def require_nondegenerate(self) -> None:
        if abs(self.b) < B_MIN:
            raise DegenerateB(f"|b| = {abs(self.b)!r} is below {B_MIN} (Dirac branch)")

    def inverse(self) -> "LctParam":
        """Inverse matrix (d, -b, -c, a); an involution, det stays 1."""
        return LctParam(self.d, -self.b, -self.c, self.a)


def kernel_phase(m: LctParam, xi, omega) -> np.ndarray:
    """(a/2b) xi^2 - xi omega / b + (d/2b) omega^2 - pi/4 (radians)."""
    m.require_nondegenerate()
    xi = np.asarray(xi, dtype=np.float64)
    omega = np.asarray(omega, dtype=np.float64)
    return (m.a / (2.0 * m.b)) * xi ** 2 - xi * omega / m.b \
        + (m.d / (2.0 * m.b)) * omega ** 2 - math.pi / 4.0


def kernel_eval(m: LctParam, mu: RootOfMinusOne, xi, omega) -> np.ndarray:
    """(2 pi |b|)^(-1/2) (cos(phi) + mu sin(phi)) with phi = kernel_phase.

    Broadcasts over xi/omega; the result carries a trailing coefficient
    axis of length 4.
    """
    phi = kernel_phase(m, xi, omega)
    scale = 1.0 / math.sqrt(2.0 * math.pi * abs(m.b))
    return scale * bq_exp_unit(mu.coeffs, phi)


def kernel_eval_inverse(m: LctParam, mu: RootOfMinusOne, xi, omega) -> np.ndarray:
    """Conjugated kernel used by the inversion formulas.

    Evaluates (2 pi |b|)^(-1/2) (cos(phi) - mu sin(phi)) with phi the
    forward phase, i.e. the kernel with the root negated.  For a
    real-quaternion mu this equals the biquaternion conjugate of the
    forward kernel.  Summed against the forward kernel over a matched
    dual lattice it reproduces a discrete delta exactly, which is what
    makes the round trips close at machine precision.  (Evaluating the
    forward kernel formula at the inverse matrix with the same argument
    order leaves an uncancelled omega^2 chirp and does not invert; the
    two differ by an argument swap and a constant exp(mu pi/2).)
    """
    phi = kernel_phase(m, xi, omega)
    scale = 1.0 / math.sqrt(2.0 * math.pi * abs(m.b))
    return scale * bq_exp_unit(-mu.coeffs, phi)
