"""Exact GF(2) computations with monomial modules over alpha(r, s)."""

import json

from ._skewtensor import (
    ShapeParseError,
    enumerate_shapes,
    fit,
    minimal_params,
    normalize_shape,
    render_diagram,
    syzygy_dims,
)
from . import _skewtensor as _core

__all__ = [
    "ShapeParseError",
    "decompose",
    "enumerate_shapes",
    "fit",
    "minimal_params",
    "module_matrices",
    "normalize_shape",
    "powers",
    "render_diagram",
    "syzygy_dims",
]


def module_matrices(shape, r=0, s=0):
    """Return the x/y action and grading of the module of a skew shape as a dict."""
    return json.loads(_core.module_matrices(shape, r, s))


def decompose(shape, expr="VxV*", r=0, s=0, structure="alpha", seed=1):
    """Decompose V, VxV or VxV* for a skew shape; r/s of 0 pick the minimal values."""
    return json.loads(_core.decompose_json(shape, expr, r, s, structure, seed))


def powers(shape, n_max=8, r=0, s=0, structure="alpha", seed=1):
    """Dimensions of the odd summands of the tensor powers, with per-step checks."""
    return json.loads(_core.powers_json(shape, n_max, r, s, structure, seed))
