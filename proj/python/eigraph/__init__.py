"""Essential ideal graph of Z_n: construction, spectra, and distance indices.

Thin wrapper over the compiled core.  Exact rationals surface as
fractions.Fraction, analysis reports as plain dicts.
"""

import json as _json
from fractions import Fraction

from ._eigraph import (
    Graph,
    charpoly,
    closed_wiener,
    energy,
    hyperenergetic,
    nullity,
    spectrum,
    verify_range,
    wiener,
    zero_eigenvalue_predicted,
)
from . import _eigraph as _core

__all__ = [
    "Graph",
    "analyze",
    "charpoly",
    "closed_hyper_wiener",
    "closed_wiener",
    "energy",
    "hyper_wiener",
    "hyperenergetic",
    "nullity",
    "spectrum",
    "verify_range",
    "wiener",
    "zero_eigenvalue_predicted",
]


def hyper_wiener(n):
    """Hyper-Wiener index as an exact Fraction."""
    num, den = _core.hyper_wiener_parts(n)
    return Fraction(num, den)


def closed_hyper_wiener(n):
    """Closed-form hyper-Wiener index, or None when no closed form covers n."""
    parts = _core.closed_hyper_wiener_parts(n)
    if parts is None:
        return None
    return Fraction(parts[0], parts[1])


def analyze(n):
    """Full analysis report as a dict (the CLI's JSON document)."""
    return _json.loads(_core.analyze_json(n))
