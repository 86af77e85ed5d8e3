"""Bit-exact binary field format plus derived CSV/PGM views.

A field file starts with the magic bytes ``BQF1``, then the grid header
(n1, n2 as little-endian uint32; origin1, origin2, delta1, delta2 as
little-endian float64), then n1*n2 records of 8 little-endian float64:
re/im of the four coefficients, ordered with axis 1 varying fastest.
Write-then-read round-trips at byte level, which is what the
deterministic-output guarantees build on.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .grids import Field2D, GridSpec
from .hypercomplex import bq_norm_sq

__all__ = ["write_field", "read_field", "write_magnitude_csv", "write_pgm"]

MAGIC = b"BQF1"
_HEADER = struct.Struct("<4sII4d")


def write_field(path: str | Path, f: Field2D) -> None:
    g = f.grid
    header = _HEADER.pack(MAGIC, g.n1, g.n2, g.origin1, g.origin2, g.delta1, g.delta2)
    # records ordered i2-major so that axis 1 varies fastest
    recs = np.empty((g.n2, g.n1, 8), dtype="<f8")
    vals = np.transpose(f.values, (1, 0, 2))
    recs[..., 0::2] = vals.real
    recs[..., 1::2] = vals.imag
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(recs.tobytes())


def read_field(path: str | Path) -> Field2D:
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size:
        raise ValueError(f"{path}: truncated header")
    magic, n1, n2, o1, o2, d1, d2 = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise ValueError(f"{path}: bad magic {magic!r}")
    body = raw[_HEADER.size:]
    expected = n1 * n2 * 8 * 8
    if len(body) != expected:
        raise ValueError(f"{path}: expected {expected} record bytes, got {len(body)}")
    recs = np.frombuffer(body, dtype="<f8").reshape(n2, n1, 8)
    vals = np.transpose(recs[..., 0::2] + 1j * recs[..., 1::2], (1, 0, 2))
    grid = GridSpec(n1, n2, o1, o2, d1, d2)
    return Field2D(grid, vals.astype(np.complex128))


def _fmt(x: float) -> str:
    return format(x, ".17g")


def write_magnitude_csv(path: str | Path, rows) -> None:
    """Rows of (omega1, omega2, nu1, nu2, magnitude); header included."""
    with open(path, "w", newline="\n") as fh:
        fh.write("omega1,omega2,nu1,nu2,magnitude\n")
        for w1, w2, v1, v2, mag in rows:
            fh.write(f"{_fmt(w1)},{_fmt(w2)},{_fmt(v1)},{_fmt(v2)},{_fmt(mag)}\n")


def magnitude(values: np.ndarray) -> np.ndarray:
    return np.sqrt(bq_norm_sq(values))


def write_pgm(path: str | Path, image: np.ndarray) -> None:
    """8-bit binary PGM of a nonnegative map, linearly scaled to 0..255.

    The peak value used for the scaling is recorded in a sidecar text
    file so the image stays a reproducible derived view.
    """
    peak = float(np.max(image)) if image.size else 0.0
    if peak > 0:
        scaled = np.rint(image / peak * 255.0).astype(np.uint8)
    else:
        scaled = np.zeros(image.shape, dtype=np.uint8)
    h, w = scaled.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(scaled.tobytes())
    Path(str(path) + ".txt").write_text(
        f"max_magnitude={_fmt(peak)}\nscale=linear_0_255\n")
