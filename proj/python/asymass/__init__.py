"""Mass and center-of-mass functionals of metrics with a noncompact boundary.

Thin wrappers over the compiled core. Reports come back as plain dicts with
the same fields as the command line JSON output.
"""

import json

from . import _asymass
from ._asymass import (
    AdmissionError,
    ConfigError,
    DegenerateMassError,
    Error,
    catalog_entries,
    decay_fit,
    extrapolate,
    pohozaev_check,
)

__all__ = [
    "AdmissionError",
    "ConfigError",
    "DegenerateMassError",
    "Error",
    "Metric",
    "catalog_entries",
    "decay_fit",
    "evaluate",
    "extrapolate",
    "pohozaev_check",
    "run_cli",
]

__version__ = _asymass.version()

_NONFINITE = {"inf": float("inf"), "-inf": float("-inf"), "nan": float("nan")}


def _decode(value):
    if isinstance(value, str):
        return _NONFINITE.get(value, value)
    if isinstance(value, list):
        return [_decode(v) for v in value]
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    return value


class Metric:
    """A catalog entry, e.g. ``Metric("schwarzschild_half", m=2.0)``."""

    def __init__(self, name, n=3, **params):
        self.name = name
        self.n = n
        self.params = {k: float(v) for k, v in params.items()}
        # Build once so bad names and parameters fail here.
        _asymass.metric_value(name, n, self.params, [0.0] * (n - 1) + [10.0])

    def value(self, point):
        return _asymass.metric_value(self.name, self.n, self.params, list(point))

    def scalar_curvature(self, point):
        return _asymass.scalar_curvature(self.name, self.n, self.params, list(point))

    def evaluate(self, functional, index=0, **options):
        return evaluate(self, functional, index, **options)

    def __repr__(self):
        return f"Metric({self.name!r}, n={self.n}, params={self.params})"


def evaluate(metric, functional, index=0, radii=None, quad=None, backend="analytic", workers=0):
    """Evaluate a functional on a radius ladder and extrapolate.

    ``radii`` is (start, factor, count); ``quad`` is (polar, azimuth, radial).
    """
    text = _asymass.evaluate_json(
        metric.name, metric.n, metric.params, functional, index, radii, quad, backend, workers
    )
    return _decode(json.loads(text))


def run_cli(*args):
    """Run the command line front end in-process; returns (code, stdout, stderr)."""
    return _asymass.run_cli([str(a) for a in args])
