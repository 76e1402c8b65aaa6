"""Domination numbers of grid graphs."""

import json

from ._core import (
    ConstructionError,
    ConvergenceError,
    CacheError,
    Error,
    InputError,
    SizeError,
    build_L,
    build_T,
    chang_formula,
    compute_C,
    construct_dominating_set,
    count_words,
    gamma_bruteforce,
    gamma_closed_form,
    gamma_profile_dp,
    is_dominating,
    loss,
    min_plus,
    oracle_C,
    quadruple_min,
    transfer_lower_bound,
    words,
)
from ._core import certificate_json as _certificate_json


def resolve_gamma(n, m, method="", k=0):
    """Certificate for gamma(G_{n,m}) as a dict (see the CLI's --json output)."""
    return json.loads(_certificate_json(n, m, method, k))


__all__ = [name for name in dir() if not name.startswith("_")]
