"""Chip-firing on graphs: critical groups, divisors, arithmetical structures."""

import json as _json
from fractions import Fraction as _Fraction

from ._chipfire import *  # noqa: F401,F403
from ._chipfire import _pairing, _run_experiment


def monodromy_pairing(graph, d1, d2, q=None):
    """Pairing value in [0, 1) as a Fraction."""
    num, den = _pairing(graph, d1, d2, q)
    return _Fraction(num, den)


def run_experiment(n=30, q="1/2", samples=1000, seed=1, p=2, jobs=1):
    """Erdos-Renyi experiment; returns the report as a dict."""
    return _json.loads(_run_experiment(n, q, samples, seed, p, jobs))
