"""Generators for the explicit configurations."""
from fractions import Fraction
from itertools import combinations

import pytest

from linkgeom.constructions import (HEXAGON, ProductGrid, cone, cylinder_grid, grid_from_json,
                                    grid_to_json, hexagon_helix6, k4n_grid_r4, moment_curve,
                                    product_grid, product_hypergraph, product_triangles,
                                    rational_helix, rotate_apex_extreme, simplex_plus_interior,
                                    torus_cycle, torus_k3n)
from linkgeom.errors import ApexInHyperplane, DegenerateInput, InvalidInput, ShapeMismatch
from linkgeom.kernel import Configuration, is_general_position, random_configuration
from linkgeom.linking import triangles_linked
from linkgeom.realizability import is_embedded, is_linear_realization
from linkgeom.scalar import QuadSqrt3
from linkgeom.verifiers import segment_surface_counts

import oracles


def test_moment_curve():
    cfg = moment_curve(4, 3, params=[0, Fraction(1, 2), 1, 3])
    assert cfg.points[1] == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))
    with pytest.raises(InvalidInput):
        moment_curve(3, 2, params=[1, 1, 2])
    with pytest.raises(InvalidInput):
        moment_curve(3, 2, params=[1, 2])


def test_hexagon_helix_is_convex_rising_and_linked():
    cfg = hexagon_helix6()
    assert [p[2] for p in cfg.points] == [1, 2, 3, 4, 5, 6]
    assert all(oracles.orient([HEXAGON[i], HEXAGON[(i + 1) % 6], HEXAGON[(i + 2) % 6]]) == 1
               for i in range(6))
    assert triangles_linked(cfg, (0, 2, 4), (1, 3, 5)).linked


def test_rational_helix_even_segment_counts():
    cfg = rational_helix(6)
    assert is_general_position(cfg)[0]
    assert all(k % 2 == 0 for k in segment_surface_counts(cfg).values())
    # the curve lies on the unit cylinder
    assert all(p[0] ** 2 + p[1] ** 2 == 1 for p in cfg.points)
    assert [p[2] for p in cfg.points] == sorted(p[2] for p in cfg.points)


def test_simplex_plus_interior_labels():
    cfg = simplex_plus_interior(3)
    assert cfg.labels == ("A0", "A1", "A2", "A3", "A4")
    assert cfg.points[4] == (Fraction(1, 4),) * 3


def test_cone_lifts_base():
    base = Configuration.from_points([(0, 0), (1, 0), (0, 1)])
    c = cone((1, 1, 1), base)
    assert c.dimension == 3 and c.labels[0] == "A0"
    assert c.points[1] == (0, 0, 0)
    with pytest.raises(ApexInHyperplane):
        cone((1, 1, 0), base)


def test_cone_in_same_dimension():
    base = Configuration.from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
    assert len(cone((0, 0, 5), base)) == 4
    with pytest.raises(ApexInHyperplane):
        cone((3, 3, 0), base)
    with pytest.raises(InvalidInput):
        cone((3, 3, 3), Configuration.from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))


def test_rotate_apex_extreme_preserves_orientation_classes():
    cfg = random_configuration(7, 4, 2)
    hull_vertex = min(range(7), key=lambda i: cfg.points[i][1])
    out = rotate_apex_extreme(cfg, hull_vertex)
    first = [p[0] for p in out.points]
    assert all(first[hull_vertex] > x for i, x in enumerate(first) if i != hull_vertex)
    s = [cfg.orient(idx) * out.orient(idx) for idx in combinations(range(7), 5)]
    assert len(set(s)) == 1
    inner = Configuration.from_points([(0, 0), (4, 0), (0, 4), (1, 1)])
    with pytest.raises(DegenerateInput):
        rotate_apex_extreme(inner, 3)


@pytest.mark.parametrize("m,n", [(2, 2), (3, 4), (5, 5)])
def test_product_triangle_list(m, n):
    tris = product_triangles(m, n)
    assert len(tris) == 2 * (m * (m - 1) // 2) * (n * (n - 1) // 2)
    assert len(set(tris)) == len(tris)
    assert product_hypergraph(m, n).faces == tuple(tris)


def test_grid_labels_and_shape():
    pts = [[(j, p, j * p) for p in range(3)] for j in range(2)]
    g = product_grid(2, 3, pts)
    assert g.config.labels[:3] == ("A11", "A12", "A13")
    assert g.point(2, 3) == (1, 2, 2)
    with pytest.raises(ShapeMismatch):
        product_grid(3, 2, pts)
    with pytest.raises(ShapeMismatch):
        ProductGrid(3, 3, g.config)
    big = ProductGrid(10, 1, random_configuration(10, 2, 1))
    assert big.index(10, 1) == 9
    wide = product_grid(1, 10, [[(p, p * p) for p in range(10)]])
    assert wide.config.labels[-1] == "A1_10"


def test_torus_splits_differ_but_both_cycles():
    g = ProductGrid(3, 3, random_configuration(9, 4, 5))
    a = torus_cycle(g, (1, 2, 3), (1, 2, 3), "product")
    b = torus_cycle(g, (1, 2, 3), (1, 2, 3), "anti")
    assert set(a.triangles) == set(product_triangles(3, 3))
    assert set(a.triangles) != set(b.triangles)
    with pytest.raises(InvalidInput):
        torus_cycle(g, (1, 2, 3), (1, 2, 3), "other")


@pytest.mark.parametrize("n", [2, 3, 5])
def test_cylinder_grid_embedded(n):
    g = cylinder_grid(n)
    assert g.shape == (2, n)
    assert is_embedded(g.config, g.triangles)[0]
    assert is_linear_realization(product_hypergraph(2, n), g.config)[0]


def test_torus_k3n_small():
    g = torus_k3n(3)
    assert g.config.field == "quad_sqrt3"
    assert isinstance(g.point(2, 1)[1], QuadSqrt3)
    assert is_embedded(g.config, g.triangles)[0]
    with pytest.raises(InvalidInput):
        torus_k3n(5)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_k4n_grid(n):
    g = k4n_grid_r4(n)
    assert g.shape == (4, n) and g.config.dimension == 4
    assert is_embedded(g.config, g.triangles)[0]


def test_grid_json_round_trip():
    g = cylinder_grid(3)
    doc = grid_to_json(g)
    assert doc["shape"] == [2, 3]
    assert grid_from_json(doc) == g
    with pytest.raises(InvalidInput):
        grid_from_json({k: v for k, v in doc.items() if k != "shape"})
