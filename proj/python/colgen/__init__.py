"""Exact Colombeau generalized numbers and sharp-topology decision procedures."""

from ._core import (
    AxiomReport,
    ExactNet,
    GenFunRep,
    IntervalDomain,
    Model,
    SampledNet,
    SeminormDescriptor,
    ValuationEstimate,
    abs_exact,
    axiom_check,
    dnp,
    embed_const,
    estimate_valuation,
    exhaustion_closure,
    falsify_order,
    from_exact,
    gf_ball_member,
    gseminorm_axiom_check,
    integrate,
    jm_embed,
    lpdo_apply,
    null_estimate,
    oracle_ball_member,
    order_compare,
    oscillating_preset,
    oscillating_schedule,
    parse,
    proot,
    psi_embed,
    q_positivity,
    scalar_ball_member,
    scalar_mul,
    seminorm,
    sharp_dist,
    sharp_norm,
    valuation,
    vnp,
)

__all__ = [
    "AxiomReport",
    "ExactNet",
    "GenFunRep",
    "IntervalDomain",
    "Model",
    "SampledNet",
    "SeminormDescriptor",
    "ValuationEstimate",
    "abs_exact",
    "axiom_check",
    "dnp",
    "embed_const",
    "estimate_valuation",
    "exhaustion_closure",
    "falsify_order",
    "from_exact",
    "gf_ball_member",
    "gseminorm_axiom_check",
    "integrate",
    "jm_embed",
    "lpdo_apply",
    "null_estimate",
    "oracle_ball_member",
    "order_compare",
    "oscillating_preset",
    "oscillating_schedule",
    "parse",
    "proot",
    "psi_embed",
    "q_positivity",
    "scalar_ball_member",
    "scalar_mul",
    "seminorm",
    "sharp_dist",
    "sharp_norm",
    "valuation",
    "vnp",
]
