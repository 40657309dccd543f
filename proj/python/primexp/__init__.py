"""Primitive exponents of symmetric companion matrices.

Thin wrapper over the compiled core: graphs, closed-form exponents, the two
brute-force oracles, exhaustive censuses and run-length string counts.
"""

import json as _json

from primexp._core import (  # noqa: F401
    ImprimitiveError,
    InvalidOrderError,
    StructuralError,
    SymCompanionGraph,
    __version__,
    exp_pair,
    expected_primitive_count,
    exponent_formula,
    exponent_oracle_bfs,
    exponent_oracle_power,
    exponent_set,
    exponent_set_10_by_k,
    f_count,
    graph_from_row,
    is_primitive,
    is_primitive_formula,
    n00_extremal,
    n00_lowest_bounds,
    n01_count,
    n10_extremal,
    n10_lowest,
    n11_count,
    s10_allowed_k,
    t_count,
)
from primexp import _core


def struct_params(graph):
    """Structural parameters of a primitive graph, as a dict."""
    return _json.loads(_core.struct_params_json(graph))


def describe(graph):
    """Primitivity, both exponents and the parameter dump, as a dict."""
    return _json.loads(_core.describe_json(graph))


def census(n, alpha, eps, jobs=0, cap=16, use_cache=True):
    """Exhaustive census of one class, as a dict.

    Histogram counts are matrix-weighted: each canonical graph stands for
    two matrices.
    """
    raw = _core.census_json(n, alpha, eps, jobs, cap, use_cache)
    data = _json.loads(raw)
    data["histogram"] = {int(k): v for k, v in data["histogram"].items()}
    return data
