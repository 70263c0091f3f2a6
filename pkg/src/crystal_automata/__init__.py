"""Combinatorial R maps and crystal-based box-ball automata of types A and D."""

from .crystal import (
    Automorphism,
    CarrierSpec,
    ElementA,
    ElementD,
    apply_automorphism,
    default_margin,
    letter_element,
    make_carrier,
    make_element_a,
    make_element_d,
    vacuum_element,
)
from .dynamics import (
    AutomatonState,
    BasicArray,
    EvolutionTrace,
    LocalStepTrace,
    contract_P_inverse,
    evolve_factorized,
    evolve_r,
    expand_P,
    factorized_trace,
    gamma,
    k_motion,
    local_step_def52,
    rearrange_Q,
)
from .errors import *  # noqa: F401,F403
from .errors import __all__ as _error_names
from .limits import (
    LimitProfile,
    limit_profile,
    limit_profile_direct,
    limit_profile_recursive,
    rhs_theorem51,
    saturate,
    saturation_point,
    vlim_direct,
    vlim_recursive,
    wlim,
)
from .rmap_a import apply_r_a, limit_x_prime, p_limit_values, p_values, pfun, pfun_limit
from .rmap_d import (
    VWValues,
    alpha,
    alpha_prime,
    apply_r_d,
    beta,
    beta_prime,
    vfun,
    vfun_twisted,
    vw_values,
    wfun,
)
from .stateio import parse_element, parse_state, read_state, serialize_state, write_state
from .verify import SUITES, VerificationReport, run_suite


def apply_r(x, y):
    """Combinatorial R for either type; dispatches on the element kind."""
    return apply_r_a(x, y) if x.kind == "A" else apply_r_d(x, y)


__all__ = [
    "Automorphism", "CarrierSpec", "ElementA", "ElementD", "apply_automorphism",
    "default_margin", "letter_element", "make_carrier", "make_element_a",
    "make_element_d", "vacuum_element",
    "AutomatonState", "BasicArray", "EvolutionTrace", "LocalStepTrace",
    "contract_P_inverse", "evolve_factorized", "evolve_r", "expand_P",
    "factorized_trace", "gamma", "k_motion", "local_step_def52", "rearrange_Q",
    "LimitProfile", "limit_profile", "limit_profile_direct", "limit_profile_recursive",
    "rhs_theorem51", "saturate", "saturation_point", "vlim_direct", "vlim_recursive", "wlim",
    "apply_r", "apply_r_a", "limit_x_prime", "p_limit_values", "p_values", "pfun", "pfun_limit",
    "VWValues", "alpha", "alpha_prime", "apply_r_d", "beta", "beta_prime", "vfun",
    "vfun_twisted", "vw_values", "wfun",
    "parse_element", "parse_state", "read_state", "serialize_state", "write_state",
    "SUITES", "VerificationReport", "run_suite",
    *_error_names,
]
