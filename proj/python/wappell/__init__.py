"""Exact construction and verification of Wronskian Appell polynomials.

The heavy lifting happens in the compiled extension ``wappell._core``;
this package re-exports its public surface.  All rational values cross the
boundary as :class:`fractions.Fraction` and all counts as Python ints, so
everything stays exact.
"""

from wappell._core import (
    AppellSpec,
    InternalError,
    Partition,
    RimHook,
    RouteMismatch,
    TheoremViolation,
    appell_poly,
    augmented_schur_table,
    centralize,
    corrupted_for_testing,
    covers_down,
    covers_up,
    degree_vector,
    derivative_identity_check,
    dual,
    dual_check,
    hook_length,
    hook_product,
    integrality_check,
    is_rim_hook,
    parse_spec,
    partitions_of,
    partitions_up_to,
    plancherel_report,
    poly_latex,
    poly_str,
    rim_hooks_down,
    rim_hooks_up,
    run_suite,
    run_verify,
    schur,
    second_moment_spec,
    skew_syt_count,
    suite_names,
    syt_count,
    topdown_check,
    wap,
)

__all__ = [
    "AppellSpec",
    "InternalError",
    "Partition",
    "RimHook",
    "RouteMismatch",
    "TheoremViolation",
    "appell_poly",
    "augmented_schur_table",
    "centralize",
    "corrupted_for_testing",
    "covers_down",
    "covers_up",
    "degree_vector",
    "derivative_identity_check",
    "dual",
    "dual_check",
    "hook_length",
    "hook_product",
    "integrality_check",
    "is_rim_hook",
    "parse_spec",
    "partitions_of",
    "partitions_up_to",
    "plancherel_report",
    "poly_latex",
    "poly_str",
    "rim_hooks_down",
    "rim_hooks_up",
    "run_suite",
    "run_verify",
    "schur",
    "second_moment_spec",
    "skew_syt_count",
    "suite_names",
    "syt_count",
    "topdown_check",
    "wap",
]

__version__ = "0.1.0"
