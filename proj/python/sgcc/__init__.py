"""Sign-gyration cocycles for shifts of finite type."""

from ._core import (
    InputError,
    __version__,
    char_poly,
    det,
    orbit_basis,
    period_points,
    perron_sign,
    primitivity_exponent,
    se_verify,
    sgc2,
    sgc2_path,
    sgcc2,
    sgcc_path,
    trace_power,
    triangle_suite,
    verify_counterexample,
)

__all__ = [
    "InputError",
    "char_poly",
    "det",
    "orbit_basis",
    "period_points",
    "perron_sign",
    "primitivity_exponent",
    "se_verify",
    "sgc2",
    "sgc2_path",
    "sgcc2",
    "sgcc_path",
    "trace_power",
    "triangle_suite",
    "verify_counterexample",
]
