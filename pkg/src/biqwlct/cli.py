"""Command-line front end.

Subcommands: generate | transform | inverse | analyze | verify.  All
outputs are deterministic for fixed inputs and flags: fixed seeds, no
timestamps, bit-exact binary fields (see :mod:`biqwlct.bqfio`).

Exit codes: 2 invalid parameters, 3 grid mismatch, 4 zero window,
1 verification failure.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click
import numpy as np

from . import bqfio
from .analysis import (
    energy,
    lct_moment_bound_sides,
    make_gaussian,
    make_haar_window,
    make_impulse,
    make_random_field,
    second_moment,
    uncertainty_check,
)
from .errors import BiqwlctError, DegenerateB, GridMismatch, NotARoot, ZeroWindow
from .grids import Field2D, GridSpec, WlctField, dual_grid_2d
from .hypercomplex import Biquaternion, RootOfMinusOne
from .kernels import LctParam
from .transforms import TransformConfig, biqwlct, biqwlct_inverse, rbiqlct_direct, \
    rbiqlct_fast, rbiqlct_inverse
from .verification import verify_all

INDEX_MAGIC = "BQW-INDEX1"


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _exit_code_for(exc: Exception) -> int:
    if isinstance(exc, GridMismatch):
        return 3
    if isinstance(exc, ZeroWindow):
        return 4
    return 2


def _parse_matrix(text: str) -> LctParam:
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"matrix needs 4 comma-separated reals, got {text!r}")
    return LctParam(*parts)


def _parse_mu(text: str) -> RootOfMinusOne:
    shorthand = {"i": "i", "j": "j", "k": "k", "I": "I"}
    if text in shorthand:
        return RootOfMinusOne(Biquaternion.unit(shorthand[text]))
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 8:
        raise ValueError(f"root needs 'i'/'j'/'k' or 8 comma-separated reals, got {text!r}")
    coeffs = [complex(parts[2 * m], parts[2 * m + 1]) for m in range(4)]
    return RootOfMinusOne(Biquaternion(*coeffs))


def _grid_from_options(n1, n2, delta1, delta2, origin1, origin2) -> GridSpec:
    if origin1 is None:
        origin1 = -(n1 // 2) * delta1
    if origin2 is None:
        origin2 = -(n2 // 2) * delta2
    return GridSpec(n1, n2, origin1, origin2, delta1, delta2)


def _grid_options(fn):
    fn = click.option("--n1", default=32, show_default=True, help="samples along axis 1")(fn)
    fn = click.option("--n2", default=32, show_default=True, help="samples along axis 2")(fn)
    fn = click.option("--delta1", default=0.25, show_default=True, help="axis-1 spacing")(fn)
    fn = click.option("--delta2", default=0.25, show_default=True, help="axis-2 spacing")(fn)
    fn = click.option("--origin1", default=None, type=float,
                      help="axis-1 origin [default: centered]")(fn)
    fn = click.option("--origin2", default=None, type=float,
                      help="axis-2 origin [default: centered]")(fn)
    return fn


def _transform_options(fn):
    fn = click.option("--m1", default="0,1,-1,0", show_default=True,
                      help="axis-1 matrix a,b,c,d (det 1)")(fn)
    fn = click.option("--m2", default="0,1,-1,0", show_default=True,
                      help="axis-2 matrix a,b,c,d (det 1)")(fn)
    fn = click.option("--mu", default="i", show_default=True,
                      help="kernel root of -1: i|j|k or 8 reals")(fn)
    return fn


@click.group()
def main():
    """Biquaternion windowed linear canonical transforms on 2-D fields."""


@main.command()
@click.argument("kind", type=click.Choice(["gaussian", "haar", "impulse", "random-seeded"]))
@_grid_options
@click.option("--alpha1", default=0.5, show_default=True, help="gaussian decay along axis 1")
@click.option("--alpha2", default=0.5, show_default=True, help="gaussian decay along axis 2")
@click.option("--c0", default="1,0", show_default=True, help="gaussian amplitude re,im")
@click.option("--seed", default=0, show_default=True, help="seed for random-seeded")
@click.option("--out", required=True, type=click.Path(), help="output field file")
def generate(kind, n1, n2, delta1, delta2, origin1, origin2, alpha1, alpha2, c0, seed, out):
    """Write a sampled test signal or window as a binary field file."""
    try:
        grid = _grid_from_options(n1, n2, delta1, delta2, origin1, origin2)
        if kind == "gaussian":
            re, im = (float(p) for p in c0.split(","))
            field = make_gaussian(complex(re, im), alpha1, alpha2, grid)
        elif kind == "haar":
            field = make_haar_window(grid)
        elif kind == "impulse":
            field = make_impulse(grid)
        else:
            field = make_random_field(grid, seed)
    except (BiqwlctError, ValueError) as exc:
        _fail(2, str(exc))
    bqfio.write_field(out, field)
    click.echo(f"wrote {out}")


def _read_field_or_fail(path: str) -> Field2D:
    try:
        return bqfio.read_field(path)
    except (OSError, ValueError) as exc:
        _fail(2, str(exc))


def _nu_grid_with_stride(grid: GridSpec, stride: int) -> GridSpec:
    n1 = (grid.n1 + stride - 1) // stride
    n2 = (grid.n2 + stride - 1) // stride
    return GridSpec(n1, n2, grid.origin1, grid.origin2,
                    grid.delta1 * stride, grid.delta2 * stride)


def _g17(x) -> str:
    return format(float(x), ".17g")


def _windowed_outputs(base: Path, w: WlctField) -> None:
    og, ng = w.omega_grid, w.nu_grid
    index_lines = [INDEX_MAGIC,
                   f"omega_grid {og.n1} {og.n2} {_g17(og.origin1)} {_g17(og.origin2)} "
                   f"{_g17(og.delta1)} {_g17(og.delta2)}",
                   f"nu_grid {ng.n1} {ng.n2} {_g17(ng.origin1)} {_g17(ng.origin2)} "
                   f"{_g17(ng.delta1)} {_g17(ng.delta2)}"]
    csv_rows = []
    nu1s, nu2s = ng.coords(1), ng.coords(2)
    w1s, w2s = og.coords(1), og.coords(2)
    peak = np.zeros((og.n1, og.n2))
    for a in range(ng.n1):
        for b in range(ng.n2):
            slice_path = Path(f"{base}_nu_{a}_{b}.bqf")
            bqfio.write_field(slice_path, Field2D(og, w.values[:, :, a, b]))
            index_lines.append(
                f"slice {a} {b} {_g17(nu1s[a])} {_g17(nu2s[b])} {slice_path.name}")
            mags = bqfio.magnitude(w.values[:, :, a, b])
            np.maximum(peak, mags, out=peak)
            for q1 in range(og.n1):
                for q2 in range(og.n2):
                    csv_rows.append((w1s[q1], w2s[q2], nu1s[a], nu2s[b], mags[q1, q2]))
    Path(f"{base}.index").write_text("\n".join(index_lines) + "\n")
    bqfio.write_magnitude_csv(f"{base}.csv", csv_rows)
    bqfio.write_pgm(f"{base}.pgm", peak)
    click.echo(f"wrote {ng.n1 * ng.n2} slices, {base}.index, {base}.csv, {base}.pgm")


@main.command()
@click.argument("input_path", type=click.Path(exists=True))
@_transform_options
@click.option("--window", "window_path", default=None, type=click.Path(exists=True),
              help="window field file; runs the windowed transform")
@click.option("--path", "path_", type=click.Choice(["direct", "fast"]), default="fast",
              show_default=True, help="evaluation path")
@click.option("--nu-stride", default=1, show_default=True,
              help="stride of the shift lattice (windowed only)")
@click.option("--out", required=True, type=click.Path(),
              help="output base path (windowed adds _nu_<i>_<j> suffixes)")
def transform(input_path, m1, m2, mu, window_path, path_, nu_stride, out):
    """Forward transform of a field file (windowed when --window given)."""
    try:
        cfg = TransformConfig(_parse_matrix(m1), _parse_matrix(m2), _parse_mu(mu), path=path_)
    except (BiqwlctError, ValueError) as exc:
        _fail(2, str(exc))
    f = _read_field_or_fail(input_path)
    base = Path(out)
    try:
        if window_path is None:
            og = dual_grid_2d(f.grid, cfg.m1, cfg.m2)
            if path_ == "fast":
                result = rbiqlct_fast(f, cfg)
            else:
                result = rbiqlct_direct(f, cfg, og)
            bqfio.write_field(base, result)
            mags = bqfio.magnitude(result.values)
            w1s, w2s = og.coords(1), og.coords(2)
            rows = [(w1s[q1], w2s[q2], 0.0, 0.0, mags[q1, q2])
                    for q1 in range(og.n1) for q2 in range(og.n2)]
            bqfio.write_magnitude_csv(f"{base}.csv", rows)
            bqfio.write_pgm(f"{base}.pgm", mags)
            click.echo(f"wrote {base}, {base}.csv, {base}.pgm")
        else:
            window = _read_field_or_fail(window_path)
            nu_grid = _nu_grid_with_stride(f.grid, nu_stride)
            w = biqwlct(f, window, cfg, nu_grid=nu_grid)
            _windowed_outputs(base, w)
    except BiqwlctError as exc:
        _fail(_exit_code_for(exc), str(exc))


def _read_index(path: Path):
    lines = path.read_text().splitlines()
    if not lines or lines[0] != INDEX_MAGIC:
        raise ValueError(f"{path}: not a windowed-transform index file")

    def grid_of(line: str, tag: str) -> GridSpec:
        parts = line.split()
        if parts[0] != tag:
            raise ValueError(f"{path}: expected {tag} line")
        return GridSpec(int(parts[1]), int(parts[2]), float(parts[3]),
                        float(parts[4]), float(parts[5]), float(parts[6]))

    og = grid_of(lines[1], "omega_grid")
    ng = grid_of(lines[2], "nu_grid")
    values = np.zeros((og.n1, og.n2, ng.n1, ng.n2, 4), dtype=np.complex128)
    for line in lines[3:]:
        if not line.strip():
            continue
        parts = line.split()
        if parts[0] != "slice":
            raise ValueError(f"{path}: bad index line {line!r}")
        a, b = int(parts[1]), int(parts[2])
        slice_field = bqfio.read_field(path.parent / parts[5])
        values[:, :, a, b] = slice_field.values
    return WlctField(og, ng, values)


@main.command()
@click.argument("input_path", type=click.Path(exists=True))
@_transform_options
@click.option("--window", "window_path", default=None, type=click.Path(exists=True),
              help="window field file (required for windowed inverses)")
@click.option("--origin1", default=None, type=float, help="signal-grid origin override")
@click.option("--origin2", default=None, type=float, help="signal-grid origin override")
@click.option("--reference", default=None, type=click.Path(exists=True),
              help="field to compare the reconstruction against (prints rel l2 error)")
@click.option("--out", required=True, type=click.Path(), help="output field file")
def inverse(input_path, m1, m2, mu, window_path, origin1, origin2, reference, out):
    """Inverse transform of a plain field file or a windowed index file."""
    try:
        cfg = TransformConfig(_parse_matrix(m1), _parse_matrix(m2), _parse_mu(mu))
    except (BiqwlctError, ValueError) as exc:
        _fail(2, str(exc))
    try:
        src = Path(input_path)
        if src.suffix == ".index":
            w = _read_index(src)
            if window_path is None:
                _fail(2, "windowed inverse requires --window")
            window = _read_field_or_fail(window_path)
            xi_grid = window.grid
            result = biqwlct_inverse(w, window, cfg, xi_grid)
        else:
            field = _read_field_or_fail(input_path)
            xi_grid = dual_grid_2d(field.grid, cfg.m1.inverse(), cfg.m2.inverse())
            if origin1 is not None or origin2 is not None:
                xi_grid = GridSpec(xi_grid.n1, xi_grid.n2,
                                   origin1 if origin1 is not None else xi_grid.origin1,
                                   origin2 if origin2 is not None else xi_grid.origin2,
                                   xi_grid.delta1, xi_grid.delta2)
            result = rbiqlct_inverse(field, cfg, xi_grid)
    except ValueError as exc:
        _fail(2, str(exc))
    except BiqwlctError as exc:
        _fail(_exit_code_for(exc), str(exc))
    bqfio.write_field(out, result)
    click.echo(f"wrote {out}")
    if reference is not None:
        ref = _read_field_or_fail(reference)
        num = float(np.linalg.norm((result.values - ref.values).ravel()))
        den = float(np.linalg.norm(ref.values.ravel()))
        click.echo(f"rel_l2_error={num / den:.6e}" if den > 0 else f"abs_l2_error={num:.6e}")


@main.command()
@click.argument("input_path", type=click.Path(exists=True))
@_transform_options
@click.option("--window", "window_path", default=None, type=click.Path(exists=True),
              help="window field; adds the windowed uncertainty report")
@click.option("--with-transform", is_flag=True,
              help="include transform-domain moment bounds")
def analyze(input_path, m1, m2, mu, window_path, with_transform):
    """Print energy and moment functionals of a field file."""
    f = _read_field_or_fail(input_path)
    lines = [("energy", energy(f)),
             ("second_moment_axis1", second_moment(f, 1)),
             ("second_moment_axis2", second_moment(f, 2))]
    try:
        cfg = TransformConfig(_parse_matrix(m1), _parse_matrix(m2), _parse_mu(mu))
        if with_transform:
            for axis in (1, 2):
                lhs, rhs = lct_moment_bound_sides(f, cfg, axis)
                lines.append((f"moment_bound_lhs_axis{axis}", lhs))
                lines.append((f"moment_bound_rhs_axis{axis}", rhs))
        if window_path is not None:
            window = _read_field_or_fail(window_path)
            for axis in (1, 2):
                r = uncertainty_check(f, window, cfg, axis)
                lines.append((f"uncertainty_lhs_axis{axis}", r.lhs))
                lines.append((f"uncertainty_rhs_axis{axis}", r.rhs))
                lines.append((f"uncertainty_rhs_single_norm_axis{axis}", r.rhs_single_norm))
                lines.append((f"uncertainty_satisfied_axis{axis}", float(r.satisfied)))
    except ValueError as exc:
        _fail(2, str(exc))
    except BiqwlctError as exc:
        _fail(_exit_code_for(exc), str(exc))
    for key, value in lines:
        click.echo(f"{key}\t{value:.12e}")


@main.command()
@click.argument("scale", type=click.Choice(["small", "default"]), default="default",
                required=False)
def verify(scale):
    """Run the full residual-check suite; exit 0 only if all checks pass."""
    report = verify_all(scale)
    click.echo(report.to_text(), nl=False)
    if not report.all_passed:
        sys.exit(1)


if __name__ == "__main__":
    main()
