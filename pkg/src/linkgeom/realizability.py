"""Exact classification of closed-simplex intersections and embedded sets.

A family of segments and triangles is embedded when any two members are
disjoint, meet only at a common vertex, or meet only along a common side.
The decision procedure is an exact LP: over all common points of the two
closed simplices, maximize the total barycentric weight (in the first
simplex) of the vertices outside the shared face F.  The maximum is 0 exactly
when every common point lies in conv(F).

``is_embedded`` puts a cheap exact prefilter in front of the LP: when the
union of the two vertex sets is in general position, the intersection leaves
conv(F) iff some vertex-disjoint pair of complementary faces crosses
transversally, which is a handful of cached determinants.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegenerateFace, InvalidInput, NotTransversal
from .kernel import Configuration
from .lp import INFEASIBLE, maximize
from .simplex import HIT, MISS, crossing_status, dim, faces, simplex

__all__ = [
    "Tag", "PairClass", "Hypergraph2", "classify_pair", "is_embedded",
    "is_linear_realization", "separated_sides", "complete_hypergraph",
    "load_hypergraph", "hypergraph_from_json", "hypergraph_to_json",
]


class Tag(str, Enum):
    DISJOINT = "DISJOINT"
    COMMON_VERTEX_ONLY = "COMMON_VERTEX_ONLY"
    COMMON_EDGE_ONLY = "COMMON_EDGE_ONLY"
    IMPROPER = "IMPROPER"


@dataclass(frozen=True)
class PairClass:
    tag: Tag
    point: tuple | None = None

    @property
    def proper(self) -> bool:
        return self.tag is not Tag.IMPROPER


def _proper_tag(shared) -> Tag:
    return {0: Tag.DISJOINT, 1: Tag.COMMON_VERTEX_ONLY, 2: Tag.COMMON_EDGE_ONLY}[len(shared)]


def classify_pair(cfg: Configuration, s1, s2) -> PairClass:
    """Exact type of conv(s1) ∩ conv(s2) by a single LP."""
    s1, s2 = simplex(s1), simplex(s2)
    shared = sorted(set(s1) & set(s2))
    if s1 == s2 or len(shared) > 2:
        return PairClass(Tag.IMPROPER, cfg.points[s1[0]])
    P = cfg.points
    d = cfg.dimension
    k1, k2 = len(s1), len(s2)
    # variables: lambda (k1), mu (k2);  sum lambda_i p_i - sum mu_j q_j = 0
    A = [[P[i][r] for i in s1] + [-P[j][r] for j in s2] for r in range(d)]
    A.append([1] * k1 + [0] * k2)
    A.append([0] * k1 + [1] * k2)
    b = [0] * d + [1, 1]
    c = [0 if i in shared else 1 for i in s1] + [0] * k2
    res = maximize(c, A, b)
    if res.status == INFEASIBLE:
        return PairClass(Tag.DISJOINT)
    if res.value == 0:
        return PairClass(_proper_tag(shared))
    lam = res.x[:k1]
    point = tuple(sum(l * P[i][r] for l, i in zip(lam, s1)) for r in range(d))
    return PairClass(Tag.IMPROPER, point)


def _bbox_apart(cfg, s1, s2) -> bool:
    ex = cfg.exact
    for r in range(cfg.dimension):
        a = [ex[i][r] for i in s1]
        b = [ex[j][r] for j in s2]
        if max(a) < min(b) or max(b) < min(a):
            return True
    return False


def _union_general(cfg, vertices) -> bool:
    k = min(len(vertices), cfg.dimension + 1)
    return all(cfg.affinely_independent(sub) for sub in combinations(vertices, k))


def _fast_proper(cfg, s1, s2):
    """True/False when the prefilter decides properness, None otherwise."""
    shared = set(s1) & set(s2)
    if not shared and _bbox_apart(cfg, s1, s2):
        return True
    union = sorted(set(s1) | set(s2))
    if len(union) <= cfg.dimension + 1:
        # independent union: both are faces of one nondegenerate simplex
        return True if cfg.affinely_independent(union) else None
    if not _union_general(cfg, union):
        return None
    d = cfg.dimension
    for f1 in faces(s1):
        for f2 in faces(s2):
            if dim(f1) + dim(f2) != d or set(f1) & set(f2):
                continue
            status, _ = crossing_status(cfg, f1, f2)
            if status == HIT:
                return False
            if status != MISS:
                return None
    return True


def is_embedded(cfg: Configuration, simplices: Iterable, fast: bool = True):
    """``(True, None)`` if the family is embedded, else ``(False, (s1, s2))``."""
    fam = [simplex(s) for s in simplices]
    for s in fam:
        if not 2 <= len(s) <= 3:
            raise InvalidInput(f"{s} is neither a segment nor a triangle")
    for s1, s2 in combinations(fam, 2):
        verdict = _fast_proper(cfg, s1, s2) if fast else None
        if verdict is None:
            verdict = classify_pair(cfg, s1, s2).proper
        if not verdict:
            return False, (s1, s2)
    return True, None


@dataclass(frozen=True)
class Hypergraph2:
    vertices: int
    faces: tuple
    edges: tuple = ()

    def __post_init__(self):
        fs = tuple(simplex(f) for f in self.faces)
        es = tuple(simplex(e) for e in self.edges)
        for f in fs:
            if len(f) != 3 or not all(0 <= v < self.vertices for v in f):
                raise InvalidInput(f"bad face {f}")
        for e in es:
            if len(e) != 2 or not all(0 <= v < self.vertices for v in e):
                raise InvalidInput(f"bad edge {e}")
        if len(set(fs)) != len(fs):
            raise InvalidInput("faces must be distinct")
        object.__setattr__(self, "faces", fs)
        object.__setattr__(self, "edges", es)


def complete_hypergraph(k: int) -> Hypergraph2:
    return Hypergraph2(k, tuple(combinations(range(k), 3)))


def is_linear_realization(hg: Hypergraph2, cfg: Configuration, vertex_map: Sequence[int] | None = None):
    """Check that mapping hypergraph vertices to points embeds all faces/edges."""
    if vertex_map is None:
        vertex_map = list(range(hg.vertices))
    vertex_map = list(vertex_map)
    if len(vertex_map) != hg.vertices or len(set(vertex_map)) != len(vertex_map):
        raise InvalidInput("vertex map must be injective and cover every vertex")
    if any(not 0 <= v < len(cfg) for v in vertex_map):
        raise InvalidInput("vertex map points outside the configuration")
    cells = []
    for f in hg.faces:
        t = simplex(vertex_map[v] for v in f)
        if not cfg.affinely_independent(t):
            raise DegenerateFace(f"face {f} maps to collinear points")
        cells.append(t)
    cells += [simplex(vertex_map[v] for v in e) for e in hg.edges]
    return is_embedded(cfg, cells)


def separated_sides(cfg: Configuration, p: int, q: int, triangle) -> bool:
    """Whether the open segment pq crosses the outline of a planar triangle an
    odd number of times (p and q on different sides of it)."""
    if cfg.dimension != 2:
        raise InvalidInput("separated_sides works in the plane")
    tri = simplex(triangle)
    if {p, q} & set(tri) or p == q:
        raise InvalidInput("segment must avoid the triangle's vertices")
    seg = simplex(p, q)
    count = 0
    for side in combinations(tri, 2):
        status, _ = crossing_status(cfg, seg, side)
        if status == HIT:
            count += 1
        elif status != MISS:
            raise NotTransversal(f"segment {seg} meets side {side} degenerately", (seg, side))
    return count % 2 == 1


def hypergraph_from_json(doc) -> Hypergraph2:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise InvalidInput("hypergraph file needs 'vertices'")
    return Hypergraph2(doc["vertices"], tuple(tuple(f) for f in doc.get("faces", [])),
                       tuple(tuple(e) for e in doc.get("edges", [])))


def hypergraph_to_json(hg: Hypergraph2) -> dict:
    return {"vertices": hg.vertices, "faces": [list(f) for f in hg.faces],
            "edges": [list(e) for e in hg.edges]}


def load_hypergraph(path) -> Hypergraph2:
    try:
        with open(path) as fh:
            return hypergraph_from_json(json.load(fh))
    except json.JSONDecodeError as e:
        raise InvalidInput(f"{path}: not valid JSON ({e.msg})") from None
    except OSError as e:
        raise InvalidInput(f"{path}: {e.strerror}") from None
