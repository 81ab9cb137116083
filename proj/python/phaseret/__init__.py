"""Modulus-only retrieval on the unit disc.

Thin wrapper over the native core: the heavy lifting is C++, this module adds
a keyword-argument front end for full runs.
"""

import json as _json

from ._core import (
    InputError,
    NumericError,
    blaschke_eval,
    hilbert_offgrid,
    hilbert_on_nodes,
    match_zero_sets,
    outer_phase,
    retrieve_json,
)

_CONFIG_DEFAULTS = {
    "method": "mqmv",
    "n": 64,
    "radii": [],
    "r": 0.8,
    "epsilon": 1e-3,
    "max_zeros": 64,
    "refine_iters": 5,
    "laurent_order": 0,
    "k_max": 20,
    "example": 0,
    "seed": 9,
    "input": "",
    "zeros_file": "",
    "out": "",
}


def retrieve(**kwargs):
    """Run a retrieval; returns {"report": ..., "comparison": ...} as plain dicts.

    Keywords mirror the CLI flags (see _CONFIG_DEFAULTS). With out="" nothing
    is written to disk. "comparison" is present only for example runs.
    """
    unknown = set(kwargs) - set(_CONFIG_DEFAULTS)
    if unknown:
        raise TypeError(f"unknown config keys: {sorted(unknown)}")
    config = {**_CONFIG_DEFAULTS, **kwargs}
    return _json.loads(retrieve_json(_json.dumps(config)))


__all__ = [
    "InputError",
    "NumericError",
    "blaschke_eval",
    "hilbert_offgrid",
    "hilbert_on_nodes",
    "match_zero_sets",
    "outer_phase",
    "retrieve",
    "retrieve_json",
]
