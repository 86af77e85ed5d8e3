"""Biquaternion algebra and the right-sided windowed linear canonical
transform on sampled 2-D fields, with a verification harness for the
transform's algebraic identities."""

from .analysis import (
    UncertaintyReport,
    energy,
    lct_moment_bound_sides,
    make_bandlimited_field,
    make_gaussian,
    make_haar_window,
    make_impulse,
    make_random_field,
    scalar_inner,
    second_moment,
    uncertainty_check,
    wlct_frequency_moment,
)
from .errors import (
    BiqwlctError,
    DegenerateB,
    GridMismatch,
    NotARoot,
    NotOrthogonal,
    ZeroWindow,
)
from .grids import Field2D, GridSpec, WlctField, dual_grid, dual_grid_2d
from .hypercomplex import (
    Biquaternion,
    RootOfMinusOne,
    bq_conjugate,
    bq_exp,
    bq_exp_unit,
    bq_multiply,
    bq_norm_sq,
    is_root_of_minus_one,
    split_simplex_perplex,
    vector_inner,
    vector_wedge,
)
from .kernels import LctParam, kernel_eval, kernel_eval_inverse, kernel_phase
from .transforms import (
    TransformConfig,
    biqwlct,
    biqwlct_inverse,
    rbiqft_direct,
    rbiqlct_direct,
    rbiqlct_fast,
    rbiqlct_inverse,
    window_norm_sq,
)
from .verification import CheckResult, VerificationReport, verify_all

__version__ = "0.1.0"

__all__ = [
    "Biquaternion",
    "RootOfMinusOne",
    "LctParam",
    "GridSpec",
    "Field2D",
    "WlctField",
    "TransformConfig",
    "UncertaintyReport",
    "VerificationReport",
    "CheckResult",
    "BiqwlctError",
    "DegenerateB",
    "GridMismatch",
    "NotARoot",
    "NotOrthogonal",
    "ZeroWindow",
    "bq_multiply",
    "bq_conjugate",
    "bq_norm_sq",
    "bq_exp",
    "bq_exp_unit",
    "is_root_of_minus_one",
    "split_simplex_perplex",
    "vector_inner",
    "vector_wedge",
    "kernel_phase",
    "kernel_eval",
    "kernel_eval_inverse",
    "dual_grid",
    "dual_grid_2d",
    "rbiqft_direct",
    "rbiqlct_direct",
    "rbiqlct_fast",
    "rbiqlct_inverse",
    "biqwlct",
    "biqwlct_inverse",
    "window_norm_sq",
    "energy",
    "scalar_inner",
    "second_moment",
    "wlct_frequency_moment",
    "uncertainty_check",
    "lct_moment_bound_sides",
    "make_gaussian",
    "make_haar_window",
    "make_impulse",
    "make_random_field",
    "make_bandlimited_field",
    "verify_all",
]
