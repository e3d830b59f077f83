"""Generators for the explicit configurations: moment curves, the
hexagon-helix, rational helices, simplex plus interior point, cones, and the
(m, n)-product grids that realize K_m x K_n.

Every generator validates its own output (general position, embeddedness, or
certified absence of intersecting vertex-disjoint triangles) before returning.
Search-based generators walk deterministic candidate sequences.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import ApexInHyperplane, DegenerateInput, InvalidInput, SearchExhausted, ShapeMismatch
from .kernel import Configuration, _rank, configuration_from_json, configuration_to_json, is_general_position
from .lp import OPTIMAL, maximize
from .realizability import Hypergraph2, is_embedded
from .scalar import QuadSqrt3
from .simplex import TwoCycle, simplex

__all__ = [
    "ProductGrid", "moment_curve", "hexagon_helix6", "rational_helix",
    "simplex_plus_interior", "cone", "product_grid", "product_hypergraph",
    "product_triangles", "cylinder_grid", "torus_k3n", "k4n_grid_r4",
    "torus_cycle", "rotate_apex_extreme", "grid_to_json", "grid_from_json",
    "HEXAGON",
]

HEXAGON = ((2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2))


def moment_curve(count: int, d: int, params: Sequence | None = None) -> Configuration:
    """Points (t, t^2, ..., t^d); parameters default to 1, 2, ..., count."""
    if params is None:
        params = range(1, count + 1)
    ts = [Fraction(t) for t in params]
    if len(ts) != count:
        raise InvalidInput(f"need {count} parameters, got {len(ts)}")
    if any(a >= b for a, b in zip(ts, ts[1:])):
        raise InvalidInput("moment-curve parameters must be strictly increasing")
    return Configuration.from_points([tuple(t ** k for k in range(1, d + 1)) for t in ts], dimension=d)


def hexagon_helix6() -> Configuration:
    """Six points above a rational convex hexagon at heights 1..6."""
    cfg = Configuration.from_points([(x, y, h + 1) for h, (x, y) in enumerate(HEXAGON)])
    if not is_general_position(cfg)[0]:
        raise SearchExhausted("hexagon-helix points are not in general position")
    return cfg


def _helix_point(t: Fraction):
    s = 1 + t * t
    return ((1 - t * t) / s, 2 * t / s, t)


def _helix_ok(cfg: Configuration) -> bool:
    from .verifiers import segment_surface_counts  # local: verifiers import constructions
    if not is_general_position(cfg)[0]:
        return False
    if len(cfg) != 6:
        return True
    try:
        counts = segment_surface_counts(cfg)
    except DegenerateInput:
        return False
    return all(k % 2 == 0 for k in counts.values())


def _helix_candidates(n: int):
    # t = offset + k/scale for k = 0..n-1, scale and offset walked in a fixed order
    for scale in range(1, 16):
        for off in range(0, 4 * scale):
            start = Fraction(off, scale) - Fraction(n - 1, 2 * scale)
            yield [start + Fraction(k, scale) for k in range(n)]


def rational_helix(n: int, max_candidates: int = 2000) -> Configuration:
    """n points on ((1-t^2)/(1+t^2), 2t/(1+t^2), t), a rational curve winding
    around the z-axis while rising.  Six-point instances are accepted only if
    every segment meets the complementary tetrahedron's surface an even number
    of times."""
    if n < 1:
        raise InvalidInput("n must be positive")
    for i, ts in enumerate(_helix_candidates(n)):
        if i >= max_candidates:
            break
        cfg = Configuration.from_points([_helix_point(t) for t in ts])
        if _helix_ok(cfg):
            return cfg
    raise SearchExhausted(f"no admissible helix parameters among {max_candidates} candidates")


def simplex_plus_interior(d: int) -> Configuration:
    """Origin, standard basis vectors and the barycenter of that simplex."""
    if d < 1:
        raise InvalidInput("d must be positive")
    pts = [tuple([0] * d)] + [tuple(int(i == j) for j in range(d)) for i in range(d)]
    pts.append(tuple(Fraction(1, d + 1) for _ in range(d)))
    return Configuration.from_points(pts, labels=[f"A{i}" for i in range(d + 2)])


def cone(apex: Sequence, base: Configuration) -> Configuration:
    """Apex prepended to a base lying in a hyperplane.

    A base of dimension d-1 is lifted to the hyperplane x_d = 0 of R^d; a base
    already in R^d must not span it.  The apex gets label "A0".
    """
    apex = tuple(Fraction(c) for c in apex)
    d = len(apex)
    if base.dimension == d - 1:
        pts = [tuple(p) + (Fraction(0),) for p in base.points]
        if apex[-1] == 0:
            raise ApexInHyperplane("apex lies in the base hyperplane x_d = 0")
    elif base.dimension == d:
        pts = list(base.points)
        if base.affinely_independent(range(len(base))) and len(base) == d + 1:
            raise InvalidInput("base spans the whole space")
        rows = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
        r = _rank(rows) if rows else 0
        if r >= d:
            raise InvalidInput("base spans the whole space")
        if _rank(rows + [[a - b for a, b in zip(apex, pts[0])]]) == r:
            raise ApexInHyperplane("apex lies in the affine hull of the base")
    else:
        raise InvalidInput(f"base must live in R^{d - 1} or R^{d}")
    labels = ["A0"] + [lab if lab != "A0" else "B0" for lab in base.labels]
    return Configuration(d, tuple([apex] + pts), tuple(labels))


def rotate_apex_extreme(cfg: Configuration, apex: int) -> Configuration:
    """Exact affine change of coordinates after which ``apex`` has the strictly
    largest first coordinate (possible iff it is a vertex of the hull)."""
    d = cfg.dimension
    P = cfg.points
    others = [i for i in range(len(cfg)) if i != apex]
    # find w with w.(apex - p) >= 1 for all others: w = w+ - w-, slack s >= 0
    A, b = [], []
    for k, i in enumerate(others):
        diff = [a - c for a, c in zip(P[apex], P[i])]
        slack = [0] * len(others)
        slack[k] = -1
        A.append(diff + [-x for x in diff] + slack)
        b.append(1)
    res = maximize([0] * (2 * d + len(others)), A, b)
    if res.status != OPTIMAL:
        raise DegenerateInput("apex is not a vertex of the convex hull")
    w = [res.x[j] - res.x[d + j] for j in range(d)]
    lead = next(j for j in range(d) if w[j] != 0)
    order = [lead] + [j for j in range(d) if j != lead]
    pts = []
    for p in P:
        first = sum(wj * pj for wj, pj in zip(w, p))
        pts.append((first,) + tuple(p[j] for j in order[1:]))
    return Configuration(d, tuple(pts), cfg.labels)


# -- product grids ----------------------------------------------------------

def _grid_label(j, p, m, n):
    return f"A{j}{p}" if m < 10 and n < 10 else f"A{j}_{p}"


def product_triangles(m: int, n: int) -> list:
    """Index triples (row-major, 0-based) of the product triangle list:
    A_jp A_kq A_jq and A_jp A_kq A_kp for j < k, p < q."""
    def idx(j, p):
        return (j - 1) * n + (p - 1)
    tris = []
    for j, k in combinations(range(1, m + 1), 2):
        for p, q in combinations(range(1, n + 1), 2):
            tris.append(simplex(idx(j, p), idx(k, q), idx(j, q)))
            tris.append(simplex(idx(j, p), idx(k, q), idx(k, p)))
    return tris


@dataclass(frozen=True)
class ProductGrid:
    m: int
    n: int
    config: Configuration
    triangles: tuple = field(init=False)

    def __post_init__(self):
        if len(self.config) != self.m * self.n:
            raise ShapeMismatch(f"{len(self.config)} points do not form a {self.m}x{self.n} grid")
        object.__setattr__(self, "triangles", tuple(product_triangles(self.m, self.n)))

    def index(self, j: int, p: int) -> int:
        """Configuration index of A_jp (1-based j, p)."""
        if not (1 <= j <= self.m and 1 <= p <= self.n):
            raise InvalidInput(f"no grid point A_{j},{p}")
        return (j - 1) * self.n + (p - 1)

    def point(self, j: int, p: int):
        return self.config.points[self.index(j, p)]

    @property
    def shape(self):
        return (self.m, self.n)


def product_grid(m: int, n: int, points) -> ProductGrid:
    """Grid from an m x n table of points (rows j, columns p)."""
    table = [list(row) for row in points]
    if len(table) != m or any(len(row) != n for row in table):
        raise ShapeMismatch(f"point table is not {m}x{n}")
    flat = [tuple(pt) for row in table for pt in row]
    labels = [_grid_label(j, p, m, n) for j in range(1, m + 1) for p in range(1, n + 1)]
    return ProductGrid(m, n, Configuration.from_points(flat, labels))


def product_hypergraph(m: int, n: int) -> Hypergraph2:
    return Hypergraph2(m * n, tuple(product_triangles(m, n)))


def torus_cycle(grid: ProductGrid, rows: Sequence[int], cols: Sequence[int], split: str = "product") -> TwoCycle:
    """Torus 2-cycle on three rows and three columns of a grid.

    Each square jk x pq (j<k in rows, p<q in cols) contributes two triangles.
    ``split="product"`` cuts it along A_jp A_kq (the grid's own triangles);
    ``split="anti"`` cuts it along A_jq A_kp instead.
    """
    tris = []
    for j, k in combinations(sorted(rows), 2):
        for p, q in combinations(sorted(cols), 2):
            a, b, c, e = grid.index(j, p), grid.index(j, q), grid.index(k, p), grid.index(k, q)
            if split == "product":
                tris += [simplex(a, e, b), simplex(a, e, c)]
            elif split == "anti":
                tris += [simplex(b, c, a), simplex(b, c, e)]
            else:
                raise InvalidInput("split is 'product' or 'anti'")
    return TwoCycle(tuple(tris))


def _grid_embedded(grid: ProductGrid) -> bool:
    return is_embedded(grid.config, grid.triangles)[0]


CYLINDER_DIRECTION = (1, -3, 2)


def cylinder_grid(n: int, shrink_budget: int = 40) -> ProductGrid:
    """(2, n)-grid in R^3: A_1p on the moment curve, A_2p = A_1p + V with V a
    fixed direction scaled by 2^-k, k increased until the triangle list is
    embedded (so no two vertex-disjoint triangles meet)."""
    if n < 2:
        raise InvalidInput("n must be at least 2")
    row1 = moment_curve(n, 3).points
    delta = Fraction(1)
    for _ in range(shrink_budget):
        V = tuple(delta * c for c in CYLINDER_DIRECTION)
        ext = Configuration.from_points([(0, 0, 0), V] + list(row1))
        if is_general_position(ext)[0]:
            grid = product_grid(2, n, [row1, [tuple(a + v for a, v in zip(p, V)) for p in row1]])
            if _grid_embedded(grid):
                return grid
        delta /= 2
    raise SearchExhausted(f"no embedded (2,{n})-grid within {shrink_budget} halvings")


def _rotate_x(p):
    c, s = QuadSqrt3(Fraction(-1, 2)), QuadSqrt3(0, Fraction(1, 2))
    x, y, z = (q if isinstance(q, QuadSqrt3) else QuadSqrt3(q) for q in p)
    return (x, c * y - s * z, s * y + c * z)


TORUS_SEEDS = ((1, 0, 1), (-1, 0, 1), (0, 0, 2), (0, 0, 3))


@lru_cache(maxsize=None)
def torus_k3n(n: int = 4) -> ProductGrid:
    """(3, n)-grid in R^3 over Q(sqrt 3): rows are a seed row and its images
    under the rotation by 2pi/3 about the x-axis."""
    if not 2 <= n <= 4:
        raise InvalidInput("torus_k3n needs 2 <= n <= 4")
    row1 = [tuple(QuadSqrt3(c) for c in s) for s in TORUS_SEEDS[:n]]
    row2 = [_rotate_x(p) for p in row1]
    row3 = [_rotate_x(p) for p in row2]
    grid = product_grid(3, n, [row1, row2, row3])
    if not _grid_embedded(grid):
        raise SearchExhausted("torus grid failed the embedded-set check")
    return grid


def _k4n_candidates():
    # translation vectors (first three coordinates, fourth) for rows 3 and 4;
    # the spatial part of v4 is the centroid of the triangle 0, V, v3.  Small
    # scales come first: the offsets must be tiny next to the cylinder's V.
    for k in range(6, 18):
        scale = Fraction(1, 2 ** k)
        for h3, h4 in ((2, 1), (1, 2), (1, 3), (1, -1)):
            for w3 in ((-3, 1, 2), (2, 1, -3), (1, 2, 1)):
                yield scale, w3, h3, h4


def k4n_grid_r4(n: int, search_budget: int = 200) -> ProductGrid:
    """(4, n)-grid in R^4: rows 1-2 are the cylinder grid in x4 = 0, rows 3-4
    translate row 1 by vectors leaving the hyperplane.  Candidates are walked
    deterministically until the triangle list is embedded."""
    if n < 2:
        raise InvalidInput("n must be at least 2")
    cyl = cylinder_grid(n)
    row1 = [tuple(cyl.point(1, p)) + (Fraction(0),) for p in range(1, n + 1)]
    row2 = [tuple(cyl.point(2, p)) + (Fraction(0),) for p in range(1, n + 1)]
    V = [a - b for a, b in zip(row2[0], row1[0])][:3]
    best = None
    for i, (scale, w3, h3, h4) in enumerate(_k4n_candidates()):
        if i >= search_budget:
            break
        s3 = tuple(scale * c for c in w3)
        # spatial part of v4: centroid of the triangle 0, V, s3
        s4 = tuple((v + s) / 3 for v, s in zip(V, s3))
        v3 = s3 + (scale * h3,)
        v4 = s4 + (scale * h4,)
        rows = [row1, row2, [tuple(a + b for a, b in zip(p, v3)) for p in row1],
                [tuple(a + b for a, b in zip(p, v4)) for p in row1]]
        try:
            grid = product_grid(4, n, rows)
        except InvalidInput:
            continue
        best = grid
        if _grid_embedded(grid):
            return grid
    raise SearchExhausted(f"no certified (4,{n})-grid within {search_budget} candidates", best)


def grid_to_json(grid: ProductGrid) -> dict:
    return configuration_to_json(grid.config, {"shape": [grid.m, grid.n], "labels": "A{j}{p}"})


def grid_from_json(doc) -> ProductGrid:
    cfg = configuration_from_json(doc)
    try:
        m, n = doc["shape"]
    except (KeyError, TypeError, ValueError):
        raise InvalidInput("grid file needs 'shape': [m, n]") from None
    return ProductGrid(int(m), int(n), cfg)
