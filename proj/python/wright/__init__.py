"""Interval-arithmetic uniqueness certificates for Wright's equation."""

import json

from ._wright import (
    FloquetKind,
    Interval,
    InvalidConfig,
    NonConvergence,
    ProofConfig,
    ResourceLimit,
    branch_and_prune,
    iexp,
    ilog,
    prove_interval as _prove_interval,
    seed_long_is_empty,
    seed_regions,
    simulate,
    table_row,
)


def prove_interval(alpha_lo, alpha_hi, config, jobs=1):
    """Run the proof on [alpha_lo, alpha_hi] and return the certificate as a dict."""
    return json.loads(_prove_interval(alpha_lo, alpha_hi, config, jobs))


__all__ = [
    "FloquetKind",
    "Interval",
    "InvalidConfig",
    "NonConvergence",
    "ProofConfig",
    "ResourceLimit",
    "branch_and_prune",
    "iexp",
    "ilog",
    "prove_interval",
    "seed_long_is_empty",
    "seed_regions",
    "simulate",
    "table_row",
]
