"""Truncated power series, the classes P_k, R_k, V_k, their bounds, and
seeded numerical verification of those bounds."""

from ._bndrot import (
    AlexanderDirection,
    ClassFunction,
    DivisionBySmallConstant,
    Error,
    InvalidMeasure,
    InvalidParameter,
    Kind,
    NonzeroInnerConstant,
    NotCaratheodory,
    RotationKind,
    TruncSeries,
    alexander,
    caratheodory_from_schwarz,
    coeff_bound,
    distortion_bounds,
    extremal_fn,
    extremal_measure,
    extremal_pk,
    from_measure,
    growth_bounds,
    herglotz_series,
    is_caratheodory,
    jordan_decompose,
    pk_disk,
    pk_from_pair,
    pk_from_rk,
    radius_starlike,
    re_bounds,
    rk_from_pk,
    robertson_disk,
    rotation_integral,
    run_cli,
    run_suite,
    sample_measure,
    schwarz_series,
    total_variation,
    verify_coefficients,
    verify_disk,
    verify_growth_distortion,
    verify_radius_starlike,
    verify_rotation,
    vk_from_pk,
)

__all__ = [name for name in dir() if not name.startswith("_")]
