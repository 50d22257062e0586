"""Twistor lifts of surfaces in four-dimensional Euclidean space."""

import json

import numpy as np

from ._twistor4 import (
    AnalysisConfig,
    Error,
    HypothesisError,
    NumericError,
    ParseError,
    Surface,
    __version__,
    basis_I,
    catalog_names,
    classify_ocs,
    compose_ocs,
    h1h2_factorize,
    pair_to_plane,
    phi,
    phi_tilde,
    plane_to_pair,
)
from . import _twistor4

__all__ = [
    "AnalysisConfig", "Error", "HypothesisError", "NumericError", "ParseError", "Surface",
    "analyze", "basis_I", "catalog", "catalog_names", "classify_ocs", "compose_ocs", "grid",
    "h1h2_factorize", "isotropy", "pair_to_plane", "phi", "phi_tilde", "plane_to_pair", "residuals",
]


def _surface(surface):
    if isinstance(surface, Surface):
        return surface
    if surface in catalog_names():
        return Surface.from_catalog(surface)
    return Surface(surface)


def _config(**options):
    cfg = AnalysisConfig()
    for key, value in options.items():
        if not hasattr(cfg, key):
            raise TypeError(f"unknown option {key!r}")
        setattr(cfg, key, value)
    return cfg


def catalog():
    """Built-in surfaces with their expected flags."""
    return json.loads(_twistor4._catalog_json())


def analyze(surface, u, v, **options):
    """Point report: frame, forms, curvature, lifts and chart values."""
    return json.loads(_twistor4._analyze(_surface(surface), u, v, _config(**options)))


def grid(surface, n, domain=None, **options):
    """Sample an n x n grid. Returns (header, columns, rows as an array)."""
    lines = _twistor4._grid_jsonl(_surface(surface), n, domain, _config(**options)).splitlines()
    header = json.loads(lines[0])
    columns = header["columns"]
    rows = np.array([[np.nan if r[c] is None else r[c] for c in columns]
                     for r in map(json.loads, lines[1:])], dtype=float)
    return header, columns, rows


def isotropy(surface, n=41, domain=None, **options):
    """The five isotropy conditions and their consensus."""
    return json.loads(_twistor4._isotropy(_surface(surface), n, domain, _config(**options)))


def residuals(surface, n=41, domain=None, **options):
    """Structure-equation residuals at h and h/2 with observed orders."""
    return json.loads(_twistor4._residuals(_surface(surface), n, domain, _config(**options)))
