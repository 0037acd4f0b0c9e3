"""Tripartite fermionic entanglement (W, GHZ, custom states) under acceleration.

Pipeline: build a Minkowski state, map each party to its Rindler I/II mode
pair, trace out region II, then take partial-transpose negativities.

>>> from fermitangle import make_w_state, full_report, equal_params
>>> round(full_report(make_w_state(), equal_params(0.0)).pi_tangle, 4)
0.5494
"""
from .closed_form import (
    cross_validate,
    find_two_tangle_zero,
    w_one_tangle_closed,
    w_pi_tangle_closed,
    w_two_tangle_closed,
)
from .errors import FermiTangleError
from .fock import (
    ModeLabel,
    Party,
    PureState,
    Wedge,
    load_state,
    make_custom_state,
    make_ghz_state,
    make_w_state,
    parse_state_text,
    tensor_reorder,
)
from .hermitian import (
    BACKEND,
    EigenResult,
    eigenvalues_hermitian,
    negative_eigenvalue_sum,
    trace_norm,
)
from .measures import (
    DensityMatrix,
    TangleReport,
    density_from_pure,
    equal_params,
    full_report,
    one_tangle,
    partial_trace,
    partial_transpose,
    scenario_params,
    two_tangle,
)
from .rindler import AccelerationSpec, RindlerParameter, acceleration_to_r, apply_rindler

__all__ = [
    "AccelerationSpec", "BACKEND", "DensityMatrix", "EigenResult", "FermiTangleError",
    "ModeLabel", "Party", "PureState", "RindlerParameter", "TangleReport", "Wedge",
    "acceleration_to_r", "apply_rindler", "cross_validate", "density_from_pure",
    "eigenvalues_hermitian", "equal_params", "find_two_tangle_zero", "full_report",
    "load_state", "make_custom_state", "make_ghz_state", "make_w_state",
    "negative_eigenvalue_sum", "one_tangle", "parse_state_text", "partial_trace",
    "partial_transpose", "scenario_params", "tensor_reorder", "trace_norm",
    "two_tangle", "w_one_tangle_closed", "w_pi_tangle_closed", "w_two_tangle_closed",
]
