"""Hydrogen wavefunctions, quadratic maps, Clifford determinants and identity checks."""

import json

from ._core import *  # noqa: F401,F403
from ._core import run_suite_json


def run_suite(suite, seed=42, tol=None):
    """Run a verification suite and return the report as a dict."""
    return json.loads(run_suite_json(suite, seed, tol or {}))
