"""Finite-ring workbench for strong g(x)-clean decompositions.

The heavy lifting lives in the compiled extension ``strongclean._core``;
this wrapper re-exports it and adds a couple of conveniences that parse
the JSON report strings into plain dicts.
"""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import (
    default_catalog,
    hunt_clean_vs_quadratic as _hunt_cvq,
    hunt_odd_asymmetry as _hunt,
    run_suite as _run_suite,
    DEFAULT_SEED,
    DEFAULT_SIZE_CAP,
)

__version__ = "0.1.0"


def suite_report(catalog, theorem_id, seed=DEFAULT_SEED, workers=1):
    """Run one theorem suite and return the report as a dict."""
    return _json.loads(_run_suite(catalog, theorem_id, seed, workers))


def hunt_report(catalog, n=1, seed=DEFAULT_SEED, workers=1):
    """Run the odd-degree asymmetry hunt and return the report as a dict."""
    return _json.loads(_hunt(catalog, n, seed, workers))


def clean_compare_report(catalog):
    """Compare clean elements against roots-plus-units of x^2 + x, as a dict."""
    return _json.loads(_hunt_cvq(catalog))
