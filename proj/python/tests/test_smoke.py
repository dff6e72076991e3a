import math

import numpy as np
import pytest
import sympy

import spgraph


def test_cyclic_four_edges():
    assert spgraph.edges(spgraph.cyclic(4)) == [(0, 2), (1, 2), (1, 3), (2, 3)]


def test_noncyclic_complete():
    g = spgraph.direct_product([2, 2])
    assert not g.is_cyclic
    assert spgraph.is_complete(g)
    assert spgraph.is_complete(spgraph.dihedral(4))


@pytest.mark.parametrize("n", [4, 6, 9, 12, 25])
def test_distance_charpoly_matches_sympy(n):
    d = sympy.Matrix(spgraph.distance_matrix(spgraph.cyclic(n)))
    x = sympy.symbols("x")
    expected = [int(c) for c in reversed(d.charpoly(x).all_coeffs())]
    assert spgraph.distance_charpoly_closed(n) == expected
    assert spgraph.charpoly(spgraph.cyclic(n), "distance")["coefficients"] == expected


def test_spectrum_against_numpy():
    g = spgraph.cyclic(10)
    doc = spgraph.spectrum(g, "adjacency")
    numeric = np.sort(np.linalg.eigvalsh(np.array(spgraph.adjacency_matrix(g), dtype=float)))[::-1]
    expanded = [e["value"] for e in doc["eigenvalues"] for _ in range(e["multiplicity"])]
    assert np.allclose(expanded, numeric, atol=1e-8)
    assert doc["comparison"]["within_tolerance"]
    assert math.isclose(spgraph.spectral_radius_adjacency(10), numeric[0], abs_tol=1e-8)


def test_verify_report():
    report = spgraph.verify(2, 20, workers=2)
    assert report["summary"]["failures"] == []
    assert len(report["records"]) == 19


def test_big_coefficients_are_exact():
    coeffs = spgraph.distance_charpoly_closed(150)
    assert all(isinstance(c, int) for c in coeffs)
    assert coeffs[-1] == 1
    assert max(abs(c) for c in coeffs) > 2**63
    # Value at x = 1 of (x+1)^(n-3) times the cubic, in exact integers.
    n, t = 150, spgraph.totient(150)
    cubic_at_1 = 1 + (3 - n) + (3 - 2 * n - 3 * t) - t * t - t * (4 - n) - n + 1
    assert sum(coeffs) == 2 ** (n - 3) * cubic_at_1


def test_errors_carry_codes():
    with pytest.raises(spgraph.SpgError) as info:
        spgraph.distance_matrix(spgraph.cyclic(5))
    assert info.value.code == "DisconnectedGraph"
    with pytest.raises(ValueError):
        spgraph.parse_group("cyclic:0")
    with pytest.raises(spgraph.SpgError):
        spgraph.cayley_from_json('{"order": 2, "table": [[0, 1], [1, 1]]}')
