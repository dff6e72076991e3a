"""Python bindings for the strong power graph library."""

import json

from ._core import (
    Group,
    SpgError,
    adjacency_charpoly_closed,
    adjacency_matrix,
    cayley_from_json,
    cyclic,
    dihedral,
    direct_product,
    distance_charpoly_closed,
    distance_matrix,
    edges,
    is_complete,
    is_prime,
    parse_group,
    spectral_radius_adjacency,
    spectral_radius_distance,
    totient,
)
from . import _core

DEFAULT_TOL = 1e-8


def charpoly(group, matrix="adjacency"):
    """Exact characteristic polynomial with its closed-form counterpart."""
    doc = json.loads(_core._charpoly_json(group, matrix))
    doc["coefficients"] = [int(c) for c in doc["coefficients"]]
    return doc


def spectrum(group, matrix="adjacency", tol=DEFAULT_TOL):
    return json.loads(_core._spectrum_json(group, matrix, tol))


def verify(n_min, n_max, tol=DEFAULT_TOL, workers=1):
    return json.loads(_core._verify_json(n_min, n_max, tol, workers))


__all__ = [
    "Group", "SpgError", "DEFAULT_TOL", "adjacency_charpoly_closed", "adjacency_matrix",
    "cayley_from_json", "charpoly", "cyclic", "dihedral", "direct_product",
    "distance_charpoly_closed", "distance_matrix", "edges", "is_complete", "is_prime",
    "parse_group", "spectral_radius_adjacency", "spectral_radius_distance", "spectrum",
    "totient", "verify",
]
