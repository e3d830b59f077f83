"""Mod-2 linking of triangles, quadrangular loops and higher simplices.

Two vertex-disjoint triangles in R^3 are linked when the outline of one
crosses the other exactly once.  The other criteria here (projection from an
extreme point, alternation along the common line of the planes, the plane
criterion, the count of sides passed "below") are independent computations
of the same invariant and are used to cross-check it.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import (ApexNotExtreme, DimensionMismatch, InvalidInput, NotTransversal,
                     ParallelPlanes)
from .kernel import Configuration
from .scalar import sign
from .simplex import BrokenLine, HIT, MISS, crossing_status, dim, outline_crossings, simplex

__all__ = [
    "Method", "LinkVerdict", "triangles_linked", "simplices_linked", "quad_loops_linked",
    "quad_split_count", "below_sides_count", "project_from_extreme",
    "line_alternation_linked", "plane_criterion_linked",
]


class Method(str, Enum):
    DIRECT = "DIRECT"
    PROJECTION = "PROJECTION"
    LINE_ALTERNATION = "LINE_ALTERNATION"
    PLANE_CRITERION = "PLANE_CRITERION"


@dataclass(frozen=True)
class LinkVerdict:
    linked: bool
    crossing_count: int
    method: Method = Method.DIRECT


def _require_dim(cfg, d, what):
    if cfg.dimension != d:
        raise DimensionMismatch(f"{what} needs points of R^{d}, got R^{cfg.dimension}")


def _require_disjoint(*cells):
    seen = set()
    for c in cells:
        if seen & set(c):
            raise InvalidInput(f"cells {cells} must be vertex-disjoint")
        seen |= set(c)


def _require_gp(cfg, vertices):
    vs = sorted(set(vertices))
    for sub in combinations(vs, min(len(vs), cfg.dimension + 1)):
        if not cfg.affinely_independent(sub):
            raise NotTransversal(f"points {sub} are affinely dependent", sub)


def triangles_linked(cfg: Configuration, t1, t2) -> LinkVerdict:
    _require_dim(cfg, 3, "triangles_linked")
    t1, t2 = simplex(t1), simplex(t2)
    if len(t1) != 3 or len(t2) != 3:
        raise InvalidInput("triangles have three vertices")
    _require_disjoint(t1, t2)
    _require_gp(cfg, t1 + t2)
    k = outline_crossings(cfg, t1, t2)
    return LinkVerdict(k == 1, k)


def simplices_linked(cfg: Configuration, s1, s2) -> LinkVerdict:
    """Odd-dimensional linking: n odd, both simplices of dimension (n+1)/2,
    linked when the boundary of s1 crosses s2 an odd number of times."""
    n = cfg.dimension
    s1, s2 = simplex(s1), simplex(s2)
    if n % 2 == 0:
        raise DimensionMismatch("simplices_linked needs odd ambient dimension")
    if dim(s1) != (n + 1) // 2 or dim(s2) != (n + 1) // 2:
        raise InvalidInput(f"both simplices must have dimension {(n + 1) // 2}")
    _require_disjoint(s1, s2)
    k = outline_crossings(cfg, s1, s2)
    return LinkVerdict(k % 2 == 1, k)


def quad_split_count(cfg: Configuration, loop1: BrokenLine, loop2: BrokenLine,
                     diagonal: str = "AC") -> int:
    """Crossings of loop1's sides with loop2 split into two triangles.

    ``diagonal`` "AC" uses triangles A'B'C', A'D'C'; "BD" uses B'C'D', B'A'D'.
    """
    a, b, c, d = loop2.vertices
    if diagonal == "AC":
        tris = [simplex(a, b, c), simplex(a, d, c)]
    elif diagonal == "BD":
        tris = [simplex(b, c, d), simplex(b, a, d)]
    else:
        raise InvalidInput("diagonal is 'AC' or 'BD'")
    count = 0
    for side in loop1.sides():
        s = simplex(side)
        for t in tris:
            status, _ = crossing_status(cfg, s, t)
            if status == HIT:
                count += 1
            elif status != MISS:
                raise NotTransversal(f"side {s} meets triangle {t} degenerately", (s, t))
    return count


def quad_loops_linked(cfg: Configuration, loop1: BrokenLine, loop2: BrokenLine) -> LinkVerdict:
    _require_dim(cfg, 3, "quad_loops_linked")
    for lp in (loop1, loop2):
        if len(lp.vertices) != 4 or not lp.closed or len(set(lp.vertices)) != 4:
            raise InvalidInput("quadrangular loops are closed with 4 distinct vertices")
    _require_disjoint(loop1.vertices, loop2.vertices)
    _require_gp(cfg, loop1.vertices + loop2.vertices)
    k = quad_split_count(cfg, loop1, loop2, "AC")
    return LinkVerdict(k % 2 == 1, k)


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _lin(p, q, t):
    return tuple(a + t * (b - a) for a, b in zip(p, q))


def below_sides_count(cfg: Configuration, apex: int, edge, opposite) -> int:
    """How many sides XY of ``opposite`` the segment UV passes below, looking
    from the apex O.

    UV is below XY when some ray from O first meets the open segment XY and
    then, strictly farther, the open segment UV.  Computed directly: find
    where XY pierces the plane OUV, check that the point Q is inside the open
    angle UOV and strictly nearer to O than the segment UV.
    """
    _require_dim(cfg, 3, "below_sides_count")
    edge, opposite = tuple(edge), tuple(opposite)
    if len(edge) != 2 or len(opposite) != 3:
        raise InvalidInput("need an edge (2 points) and an opposite triangle (3 points)")
    _require_disjoint((apex,), edge, opposite)
    _require_gp(cfg, (apex,) + edge + opposite)
    P = cfg.points
    O, U, V = P[apex], P[edge[0]], P[edge[1]]
    u, v = _sub(U, O), _sub(V, O)
    n = _cross(u, v)
    count = 0
    for x, y in combinations(opposite, 2):
        X, Y = P[x], P[y]
        sx, sy = _dot(n, _sub(X, O)), _dot(n, _sub(Y, O))
        if sx == 0 or sy == 0:
            raise NotTransversal(f"side {x}{y} touches the plane of the apex and edge", (x, y))
        if (sx > 0) == (sy > 0):
            continue
        Q = _lin(X, Y, sx / (sx - sy))
        q = _sub(Q, O)
        nn = _dot(n, n)
        a = _dot(_cross(q, v), n) / nn
        b = _dot(_cross(u, q), n) / nn
        s = a + b
        if sign(a) == 0 or sign(b) == 0 or sign(s - 1) == 0:
            raise NotTransversal(f"side {x}{y} is seen exactly along a ray through a vertex", (x, y))
        if a > 0 and b > 0 and s < 1:
            count += 1
    return count


def project_from_extreme(cfg: Configuration, apex: int) -> Configuration:
    """Central projection from the apex onto the hyperplane x1 = b.

    The apex must have the strictly largest first coordinate a; b is the
    midpoint of a and the second-largest first coordinate.  Output points keep
    their labels and drop the first coordinate.
    """
    if cfg.dimension < 2:
        raise DimensionMismatch("projection needs dimension at least 2")
    P = cfg.points
    a = P[apex][0]
    others = [i for i in range(len(cfg)) if i != apex]
    if not others:
        raise InvalidInput("nothing to project")
    second = max(P[i][0] for i in others)
    if not second < a:
        raise ApexNotExtreme(f"point {cfg.labels[apex]} does not have the strictly largest first coordinate")
    b = (a + second) / 2
    O = P[apex]
    pts = []
    for i in others:
        X = P[i]
        t = (a - b) / (a - X[0])
        pts.append(tuple(o + t * (x - o) for o, x in zip(O[1:], X[1:])))
    return Configuration(cfg.dimension - 1, tuple(pts), tuple(cfg.labels[i] for i in others))


def _outline_meets_plane(P, tri, normal, base):
    """Points where the outline of ``tri`` crosses the plane (normal, base)."""
    s = [_dot(normal, _sub(P[i], base)) for i in tri]
    if any(x == 0 for x in s):
        raise NotTransversal(f"a vertex of {tri} lies on the other plane", tuple(tri))
    pts = []
    for (i, si), (j, sj) in combinations(list(zip(tri, s)), 2):
        if (si > 0) != (sj > 0):
            pts.append(_lin(P[i], P[j], si / (si - sj)))
    return pts


def line_alternation_linked(cfg: Configuration, t1, t2) -> LinkVerdict:
    """Linked iff the two outline/line point pairs alternate on the common line."""
    _require_dim(cfg, 3, "line_alternation_linked")
    t1, t2 = simplex(t1), simplex(t2)
    _require_disjoint(t1, t2)
    P = cfg.points
    n1 = _cross(_sub(P[t1[1]], P[t1[0]]), _sub(P[t1[2]], P[t1[0]]))
    n2 = _cross(_sub(P[t2[1]], P[t2[0]]), _sub(P[t2[2]], P[t2[0]]))
    direction = _cross(n1, n2)
    if all(c == 0 for c in direction):
        raise ParallelPlanes("planes of the triangles are parallel",
                             LinkVerdict(False, 0, Method.LINE_ALTERNATION))
    red = _outline_meets_plane(P, t1, n2, P[t2[0]])
    blue = _outline_meets_plane(P, t2, n1, P[t1[0]])
    if len(red) < 2 or len(blue) < 2:
        return LinkVerdict(False, 0, Method.LINE_ALTERNATION)
    r = sorted(_dot(direction, x) for x in red)
    bl = [_dot(direction, x) for x in blue]
    if len(set(r + bl)) < 4:
        raise NotTransversal("intersection points coincide on the common line", (t1, t2))
    inside = sum(1 for x in bl if r[0] < x < r[1])
    return LinkVerdict(inside == 1, inside, Method.LINE_ALTERNATION)


def _in_open_triangle(P, tri, x, normal):
    # x lies in the plane of tri; test sides by orientation around the normal
    A, B, C = (P[i] for i in tri)
    signs = [sign(_dot(normal, _cross(_sub(Q, R), _sub(x, R)))) for R, Q in ((A, B), (B, C), (C, A))]
    if 0 in signs:
        raise NotTransversal("crossing point on the boundary of a triangle", tuple(tri))
    return all(s == signs[0] for s in signs)


def plane_criterion_linked(cfg: Configuration, t1, t2) -> LinkVerdict:
    """Linked iff exactly one of the (two) points where t1's outline crosses
    the plane of t2 lies inside t2."""
    _require_dim(cfg, 3, "plane_criterion_linked")
    t1, t2 = simplex(t1), simplex(t2)
    _require_disjoint(t1, t2)
    P = cfg.points
    n2 = _cross(_sub(P[t2[1]], P[t2[0]]), _sub(P[t2[2]], P[t2[0]]))
    pts = _outline_meets_plane(P, t1, n2, P[t2[0]])
    inside = sum(1 for x in pts if _in_open_triangle(P, t2, x, n2))
    return LinkVerdict(inside == 1, inside, Method.PLANE_CRITERION)
