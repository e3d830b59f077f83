"""Simplices by index, transversal crossings, broken lines and 2-cycles.

For d+2 points P0..P(d+1) of R^d the vector
``c_i = (-1)^i det(P without i)`` (edge-vector determinants) is an affine
dependence: sum c_i = 0 and sum c_i P_i = 0.  Splitting it along the vertex
sets of two complementary simplices gives their unique affine-hull meeting
point in barycentric form, so every crossing test reduces to d+2 cached
determinants.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import DimensionMismatch, InvalidInput, NotTransversal, SingularSystem
from .kernel import Configuration
from .linalg import in_closed_simplex

__all__ = [
    "simplex", "dim", "facets", "faces", "Transversal", "BrokenLine", "TwoCycle",
    "HIT", "MISS", "TOUCH", "SINGULAR", "crossing_status", "transversal_point",
    "count_interior_crossings", "crossing_pairs", "outline_crossings", "is_two_cycle",
    "line_body_crossings", "bodies_crossings_4d", "broken_lines_crossings",
    "tetrahedron_surface",
]

HIT, MISS, TOUCH, SINGULAR = "hit", "miss", "touch", "singular"


def simplex(*indices) -> tuple:
    """Canonical (sorted, distinct) vertex tuple."""
    if len(indices) == 1 and not isinstance(indices[0], int):
        indices = tuple(indices[0])
    s = tuple(sorted(indices))
    if len(set(s)) != len(s):
        raise InvalidInput(f"repeated vertex in simplex {indices!r}")
    return s


def dim(s) -> int:
    return len(s) - 1


def facets(s) -> list:
    return [tuple(f) for f in combinations(s, len(s) - 1)]


def faces(s) -> list:
    """All nonempty faces, smallest first."""
    return [f for k in range(1, len(s) + 1) for f in combinations(s, k)]


def tetrahedron_surface(vertices) -> list:
    return [simplex(f) for f in combinations(vertices, 3)]


@dataclass(frozen=True)
class Transversal:
    point: tuple
    alpha: tuple
    beta: tuple


def _dependence(cfg: Configuration, u, v):
    pts = tuple(u) + tuple(v)
    return [cfg.det(pts[:i] + pts[i + 1:]) if i % 2 == 0 else -cfg.det(pts[:i] + pts[i + 1:])
            for i in range(len(pts))]


def crossing_status(cfg: Configuration, u, v):
    """Classify complementary vertex-disjoint simplices u, v.

    Returns ``(status, c)`` where status is HIT (relative interiors meet in one
    point), MISS, TOUCH (hulls meet on a boundary) or SINGULAR (affine hulls
    not transversal), and ``c`` is the oriented affine dependence.
    """
    c = _dependence(cfg, u, v)
    if all(x == 0 for x in c):
        return SINGULAR, c
    k = len(u)
    su = sum(c[:k])
    if su == 0:
        # the affine hulls are parallel: no common point at all
        return MISS, c
    if su < 0:
        c = [-x for x in c]
    if any(x < 0 for x in c[:k]) or any(x > 0 for x in c[k:]):
        return MISS, c
    if any(x == 0 for x in c):
        return TOUCH, c
    return HIT, c


def _check_complementary(cfg, s1, s2):
    if dim(s1) + dim(s2) != cfg.dimension:
        raise DimensionMismatch(
            f"dimensions {dim(s1)} + {dim(s2)} do not add up to {cfg.dimension}")
    if set(s1) & set(s2):
        raise InvalidInput(f"simplices {s1} and {s2} share a vertex")


def _ratio(x, s):
    if isinstance(x, int) and isinstance(s, int):
        return Fraction(x, s)
    return x / s


def _point_from(cfg, s, coeffs):
    d = cfg.dimension
    return tuple(sum(a * cfg.points[i][j] for a, i in zip(coeffs, s))
                 for j in range(d))


def transversal_point(cfg: Configuration, s1, s2):
    """Point where the relative interiors of s1 and s2 meet, or None.

    Raises SingularSystem when the affine hulls are not transversal.  A meeting
    point with some barycentric coefficient equal to zero is not a relative
    interior point and yields None.
    """
    s1, s2 = tuple(s1), tuple(s2)
    _check_complementary(cfg, s1, s2)
    status, c = crossing_status(cfg, s1, s2)
    if status == SINGULAR:
        raise SingularSystem(f"affine hulls of {s1} and {s2} are not transversal", (s1, s2))
    if status != HIT:
        return None
    k = len(s1)
    su = sum(c[:k])
    alpha = tuple(_ratio(x, su) for x in c[:k])
    beta = tuple(_ratio(-x, su) for x in c[k:])
    return Transversal(_point_from(cfg, s1, alpha), alpha, beta)


def crossing_pairs(cfg: Configuration, family: Iterable, disjoint_only: bool = True) -> list:
    """Unordered complementary pairs of the family whose relative interiors cross.

    Pairs sharing a vertex are skipped when ``disjoint_only``; otherwise they
    are checked to be transversal (their union affinely independent, so the
    relative interiors cannot meet).  TOUCH raises NotTransversal, a singular
    pair raises SingularSystem; both carry the pair.
    """
    fam = [tuple(s) for s in family]
    d = cfg.dimension
    out = []
    for a, b in combinations(fam, 2):
        if dim(a) + dim(b) != d:
            continue
        if set(a) & set(b):
            if disjoint_only:
                continue
            if not cfg.affinely_independent(sorted(set(a) | set(b))):
                raise SingularSystem(f"{a} and {b} share a vertex and are not transversal", (a, b))
            continue
        status, _ = crossing_status(cfg, a, b)
        if status == HIT:
            out.append((a, b))
        elif status == TOUCH:
            raise NotTransversal(f"{a} and {b} touch at a boundary point", (a, b))
        elif status == SINGULAR:
            raise SingularSystem(f"affine hulls of {a} and {b} are not transversal", (a, b))
    return out


def count_interior_crossings(cfg: Configuration, family: Iterable, disjoint_only: bool = True) -> int:
    return len(crossing_pairs(cfg, family, disjoint_only))


def _hit_or_raise(cfg, a, b, exc=SingularSystem):
    status, _ = crossing_status(cfg, a, b)
    if status == HIT:
        return True
    if status == MISS:
        return False
    if status == TOUCH or exc is NotTransversal:
        raise NotTransversal(f"{a} and {b} do not cross transversally", (a, b))
    raise SingularSystem(f"affine hulls of {a} and {b} are not transversal", (a, b))


def outline_crossings(cfg: Configuration, boundary_of, target) -> int:
    """Number of facets of ``boundary_of`` whose relative interior meets
    the relative interior of ``target``."""
    target = tuple(target)
    count = 0
    for f in facets(tuple(boundary_of)):
        _check_complementary(cfg, f, target)
        if _hit_or_raise(cfg, f, target):
            count += 1
    return count


def _edges(t):
    return [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]


def is_two_cycle(triangles: Iterable):
    """``(True, None)`` if every edge has even multiplicity, else ``(False, edge)``."""
    mult = Counter(e for t in triangles for e in _edges(simplex(t)))
    odd = sorted(e for e, k in mult.items() if k % 2)
    return (True, None) if not odd else (False, odd[0])


@dataclass(frozen=True)
class BrokenLine:
    """Polygonal line through vertex indices; closed lines return to the start."""

    vertices: tuple
    closed: bool = True

    def __post_init__(self):
        v = tuple(self.vertices)
        object.__setattr__(self, "vertices", v)
        if len(v) < 2:
            raise InvalidInput("a broken line needs at least two vertices")
        if any(a == b for a, b in zip(v, v[1:])):
            raise InvalidInput("consecutive vertices must differ")
        if self.closed and (len(v) < 3 or v[0] == v[-1]):
            raise InvalidInput("closed broken line: store at least 3 vertices, first != last")

    def sides(self) -> list:
        v = self.vertices
        s = list(zip(v, v[1:]))
        if self.closed:
            s.append((v[-1], v[0]))
        return s


@dataclass(frozen=True)
class TwoCycle:
    triangles: tuple

    def __post_init__(self):
        tris = tuple(simplex(t) for t in self.triangles)
        if any(len(t) != 3 for t in tris):
            raise InvalidInput("a 2-cycle consists of triangles")
        if len(set(tris)) != len(tris):
            raise InvalidInput("triangles of a 2-cycle must be distinct")
        ok, edge = is_two_cycle(tris)
        if not ok:
            raise InvalidInput(f"edge {edge} lies on an odd number of triangles")
        object.__setattr__(self, "triangles", tris)


def _on_other_cells(cfg, x, cells, skip):
    for cell in cells:
        if cell is skip or cell == skip:
            continue
        if in_closed_simplex([cfg.points[i] for i in cell], x):
            return cell
    return None


def line_body_crossings(cfg: Configuration, line: BrokenLine, cycle: TwoCycle) -> int:
    """Crossings of a broken line with the body of a 2-cycle in R^3.

    Every (side, triangle) pair must be disjoint or cross at a single common
    interior point that lies on no other triangle and no other side.
    """
    if cfg.dimension != 3:
        raise DimensionMismatch("line_body_crossings works in R^3")
    sides = [simplex(s) for s in line.sides()]
    count = 0
    for s in sides:
        for t in cycle.triangles:
            if set(s) & set(t):
                raise NotTransversal(f"side {s} and triangle {t} share a vertex", (s, t))
            if not _hit_or_raise(cfg, s, t, NotTransversal):
                continue
            x = transversal_point(cfg, s, t).point
            other = _on_other_cells(cfg, x, cycle.triangles, t) or _on_other_cells(cfg, x, sides, s)
            if other is not None:
                raise NotTransversal(f"crossing of {s} and {t} also lies on {other}", (s, t))
            count += 1
    return count


def bodies_crossings_4d(cfg: Configuration, c1: TwoCycle, c2: TwoCycle) -> int:
    """Transversal triangle-triangle crossings between two 2-cycles in R^4."""
    if cfg.dimension != 4:
        raise DimensionMismatch("bodies_crossings_4d works in R^4")
    count = 0
    for t1 in c1.triangles:
        for t2 in c2.triangles:
            if set(t1) & set(t2):
                raise NotTransversal(f"triangles {t1} and {t2} share a vertex", (t1, t2))
            if not _hit_or_raise(cfg, t1, t2, NotTransversal):
                continue
            x = transversal_point(cfg, t1, t2).point
            other = _on_other_cells(cfg, x, c1.triangles, t1) or _on_other_cells(cfg, x, c2.triangles, t2)
            if other is not None:
                raise NotTransversal(f"crossing of {t1} and {t2} also lies on {other}", (t1, t2))
            count += 1
    return count


def broken_lines_crossings(cfg: Configuration, l1: BrokenLine, l2: BrokenLine) -> int:
    """Crossings of two vertex-disjoint broken lines in the plane."""
    if cfg.dimension != 2:
        raise DimensionMismatch("broken_lines_crossings works in R^2")
    s1 = [simplex(s) for s in l1.sides()]
    s2 = [simplex(s) for s in l2.sides()]
    count = 0
    for a in s1:
        for b in s2:
            if set(a) & set(b):
                raise NotTransversal(f"sides {a} and {b} share a vertex", (a, b))
            if not _hit_or_raise(cfg, a, b, NotTransversal):
                continue
            x = transversal_point(cfg, a, b).point
            other = _on_other_cells(cfg, x, s1, a) or _on_other_cells(cfg, x, s2, b)
            if other is not None:
                raise NotTransversal(f"crossing of {a} and {b} also lies on {other}", (a, b))
            count += 1
    return count
