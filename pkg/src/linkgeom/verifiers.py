"""One verifier per parity / existence statement.

Each verifier checks arity and general position, computes the relevant count
or witness, and returns a :class:`ParityReport`.  Degenerate input is a
verdict, not an exception: the report is DEGENERATE and, where a statement
also holds without general position (the existence of some intersecting
pair), the corresponding witness is searched for and attached.  A VIOLATED
report means the computation contradicts a theorem and signals a bug.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Callable, Sequence

from .errors import ArityError, DegenerateInput, DimensionMismatch, InvalidInput
from .kernel import Configuration, is_general_position
from .linking import quad_loops_linked, simplices_linked, triangles_linked
from .realizability import classify_pair, is_embedded, Tag
from .simplex import (BrokenLine, HIT, MISS, crossing_pairs, crossing_status, dim,
                      facets, simplex)

__all__ = [
    "Claim", "Verdict", "ParityReport", "REGISTRY", "verify",
    "verify_plane_intersection", "verify_k33_plane", "verify_rlt_pre",
    "verify_unlinking_plane", "verify_cgs", "verify_intersection_r3",
    "verify_unlinking_r3", "verify_sachs", "verify_vkf", "verify_unlinking_r4",
    "verify_join3", "verify_stat_il", "verify_product", "verify_deleted_face_linking",
    "segment_surface_counts", "triangle_surface_counts", "deleted_face_family",
    "sachs_loop_pairs", "GUARANTEED_SHAPES",
]


class Claim(str, Enum):
    ODD = "ODD"
    EVEN = "EVEN"
    WITNESS_EXISTS = "WITNESS_EXISTS"
    SEARCH = "SEARCH"  # plain search without a theorem behind it


class Verdict(str, Enum):
    CONFIRMED = "CONFIRMED"
    VIOLATED = "VIOLATED"
    DEGENERATE = "DEGENERATE"


@dataclass
class ParityReport:
    theorem: str
    summary: str
    count: int
    claim: Claim
    verdict: Verdict
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.VIOLATED

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "summary": self.summary,
            "count": self.count,
            "claim": self.claim.value,
            "verdict": self.verdict.value,
            "witnesses": [_jsonable(w) for w in self.witnesses],
            "details": _jsonable(self.details),
        }


def _jsonable(x):
    from fractions import Fraction
    from .scalar import QuadSqrt3, format_scalar
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, Fraction):
        return format_scalar(x, "rational")
    if isinstance(x, QuadSqrt3):
        return format_scalar(x, "quad_sqrt3")
    if isinstance(x, Enum):
        return x.value
    return x


def _summary(cfg: Configuration) -> str:
    return f"{len(cfg)} points in R^{cfg.dimension} ({cfg.field})"


def _arity(cfg: Configuration, n: int, d: int, what: str):
    if cfg.dimension != d:
        raise DimensionMismatch(f"{what} needs points in R^{d}, got R^{cfg.dimension}")
    if len(cfg) != n:
        raise ArityError(f"{what} needs exactly {n} points, got {len(cfg)}")


def _parity_report(theorem, cfg, count, claim, witnesses, details=None):
    want = 1 if claim is Claim.ODD else 0
    verdict = Verdict.CONFIRMED if count % 2 == want else Verdict.VIOLATED
    return ParityReport(theorem, _summary(cfg), count, claim, verdict, witnesses, details or {})


def _degenerate(theorem, cfg, witness_gp, claim, fallback=None, details=None):
    """DEGENERATE report; a fallback witness search that comes back empty is a
    violation of the statement that holds without general position."""
    det = {"general_position": False, "dependent_subset": list(witness_gp or ()),
           "suggestion": "perturb the configuration into general position"}
    det.update(details or {})
    witnesses = []
    verdict = Verdict.DEGENERATE
    if fallback is not None:
        witnesses = fallback()
        if not witnesses:
            verdict = Verdict.VIOLATED
    return ParityReport(theorem, _summary(cfg), len(witnesses), claim, verdict, witnesses, det)


def _closed_meet(cfg, a, b) -> bool:
    return classify_pair(cfg, a, b).tag is not Tag.DISJOINT


def _first_closed_meeting(cfg, pairs):
    for a, b in pairs:
        if set(a) & set(b):
            continue
        status, _ = crossing_status(cfg, a, b) if dim(a) + dim(b) == cfg.dimension else (None, None)
        if status == HIT or _closed_meet(cfg, a, b):
            return [(a, b)]
    return []


def _safe_count(fn):
    try:
        return fn(), None
    except DegenerateInput as exc:
        return None, exc


# -- plane ----------------------------------------------------------------

def _collinear_witness(cfg):
    """AC/BD pair for collinear A, B, C with B between A and C."""
    for tri in combinations(range(len(cfg)), 3):
        if cfg.affinely_independent(tri):
            continue
        pts = sorted(tri, key=lambda i: cfg.points[i])
        a, b, c = pts
        for d in range(len(cfg)):
            if d not in tri:
                return [(simplex(a, c), simplex(b, d))]
    return []


def verify_plane_intersection(cfg: Configuration) -> ParityReport:
    """Five points in the plane: odd number of crossings of disjoint segments."""
    name = "plane-intersection"
    _arity(cfg, 5, 2, name)
    segs = list(combinations(range(5), 2))
    gp, wit = is_general_position(cfg)
    if not gp:
        return _degenerate(name, cfg, wit, Claim.WITNESS_EXISTS,
                           lambda: _collinear_witness(cfg) or _first_closed_meeting(cfg, combinations(segs, 2)))
    pairs = crossing_pairs(cfg, segs)
    return _parity_report(name, cfg, len(pairs), Claim.ODD, pairs)


def verify_k33_plane(cfg: Configuration, f1: Sequence[int] = (0, 1, 2), f2: Sequence[int] = (3, 4, 5)) -> ParityReport:
    """Two triples in the plane: crossings among the 9 segments joining them."""
    name = "k33"
    _arity(cfg, 6, 2, name)
    f1, f2 = tuple(f1), tuple(f2)
    if sorted(f1 + f2) != list(range(6)):
        raise InvalidInput("the triples must partition the six points")
    segs = [simplex(i, j) for i in f1 for j in f2]
    gp, wit = is_general_position(cfg)
    if not gp:
        return _degenerate(name, cfg, wit, Claim.WITNESS_EXISTS,
                           lambda: _first_closed_meeting(cfg, combinations(segs, 2)))
    pairs = crossing_pairs(cfg, segs)
    rep = _parity_report(name, cfg, len(pairs), Claim.ODD, pairs)
    rep.details["intersecting_pair"] = list(pairs[0]) if pairs else None
    return rep


def verify_rlt_pre(cfg: Configuration, reds: Sequence[int] = (0, 1, 2, 3), blues: Sequence[int] = (4, 5)) -> ParityReport:
    """4 red + 2 blue points with non-crossing bichromatic segments: some red
    pair R1, R2 has the other red segment crossing R1B1R2B2 an odd number of times."""
    name = "red-blue-plane"
    _arity(cfg, 6, 2, name)
    reds, blues = tuple(reds), tuple(blues)
    if sorted(reds + blues) != list(range(6)) or len(reds) != 4:
        raise InvalidInput("need 4 red and 2 blue indices partitioning the points")
    gp, wit = is_general_position(cfg)
    bichrom = [simplex(r, b) for r in reds for b in blues]
    if not gp or not is_embedded(cfg, bichrom)[0]:
        return _degenerate(name, cfg, wit, Claim.WITNESS_EXISTS,
                           details={"precondition": "bichromatic segments must meet only at common vertices"})
    b1, b2 = blues
    counts = {}
    witnesses = []
    for r1, r2 in combinations(reds, 2):
        rest = simplex(*(r for r in reds if r not in (r1, r2)))
        line = BrokenLine((r1, b1, r2, b2))
        k = sum(1 for s in line.sides() if crossing_status(cfg, rest, simplex(s))[0] == HIT)
        counts[(r1, r2)] = k
        if k % 2:
            witnesses.append(((r1, r2), rest))
    verdict = Verdict.CONFIRMED if witnesses else Verdict.VIOLATED
    return ParityReport(name, _summary(cfg), len(witnesses), Claim.WITNESS_EXISTS, verdict,
                        witnesses, {"crossings_by_red_pair": [[list(k), v] for k, v in counts.items()]})


def segment_outline_counts(cfg: Configuration) -> dict:
    """For 5 points in the plane: segment -> crossings with the outline of the
    triangle on the other three points."""
    out = {}
    for seg in combinations(range(len(cfg)), 2):
        rest = [i for i in range(len(cfg)) if i not in seg]
        out[seg] = sum(1 for side in combinations(rest, 2)
                       if _hit(cfg, seg, side))
    return out


def _hit(cfg, a, b) -> bool:
    status, _ = crossing_status(cfg, simplex(a), simplex(b))
    if status == HIT:
        return True
    if status == MISS:
        return False
    raise DegenerateInput(f"{a} and {b} do not cross transversally")


def verify_unlinking_plane(cfg: Configuration) -> ParityReport:
    name = "unlinking-plane"
    _arity(cfg, 5, 2, name)
    gp, wit = is_general_position(cfg)
    if not gp:
        return _degenerate(name, cfg, wit, Claim.EVEN)
    counts = segment_outline_counts(cfg)
    once = [s for s, k in counts.items() if k == 1]
    return _parity_report(name, cfg, len(once), Claim.EVEN, once)


# -- 3-space --------------------------------------------------------------

def _triangle_pairs(n):
    """Unordered complementary triangle pairs of range(n) for n == 6."""
    out = []
    for t in combinations(range(n), 3):
        rest = tuple(i for i in range(n) if i not in t)
        if t < rest:
            out.append((t, rest))
    return out


def verify_cgs(cfg: Configuration) -> ParityReport:
    """Six points in 3-space: odd number of linked triangle pairs."""
    name = "cgs"
    _arity(cfg, 6, 3, name)
    gp, wit = is_general_position(cfg)
    if not gp:
        return _degenerate(name, cfg, wit, Claim.ODD)
    linked, counts = [], []
    for t1, t2 in _triangle_pairs(6):
        v = triangles_linked(cfg, t1, t2)
        counts.append(v.crossing_count)
        if v.linked:
            linked.append((t1, t2))
    return _parity_report(name, cfg, len(linked), Claim.ODD, linked,
                          {"outline_crossings": counts})


def verify_intersection_r3(cfg: Configuration) -> ParityReport:
    """Six points in 3-space: some segment meets the disjoint closed triangle."""
    name = "intersection-r3"
    _arity(cfg, 6, 3, name)
    for seg in combinations(range(6), 2):
        for tri in combinations([i for i in range(6) if i not in seg], 3):
            status, _ = crossing_status(cfg, seg, tri)
            if status == HIT or (status != MISS and _closed_meet(cfg, seg, tri)):
                return ParityReport(name, _summary(cfg), 1, Claim.WITNESS_EXISTS,
                                    Verdict.CONFIRMED, [(seg, tri)])
    # the transversal test already decides every general-position pair; fall
    # back to the closed test for completeness
    found = _first_closed_meeting(cfg, ((s, t) for s in combinations(range(6), 2)
                                        for t in combinations(range(6), 3)))
    verdict = Verdict.CONFIRMED if found else Verdict.VIOLATED
    return ParityReport(name, _summary(cfg), len(found), Claim.WITNESS_EXISTS, verdict, found)


def segment_surface_counts(cfg: Configuration) -> dict:
    """For 6 points in 3-space: segment -> crossings with the surface of the
    tetrahedron on the other four points."""
    out = {}
    for seg in combinations(range(len(cfg)), 2):
        rest = [i for i in range(len(cfg)) if i not in seg]
        out[seg] = sum(1 for face in combinations(rest, 3) if _hit(cfg, seg, face))
    return out


def verify_unlinking_r3(cfg: Configuration) -> ParityReport:
    name = "unlinking-r3"
    _arity(cfg, 6, 3, name)
    gp, wit = is_general_position(cfg)
    if not gp:
        return _degenerate(name, cfg, wit, Claim.EVEN)
    counts = segment_surface_counts(cfg)
    once = [s for s, k in counts.items() if k == 1]
    return _parity_report(name, cfg, len(once), Claim.EVEN, once,
                          {"per_segment": [[list(s), k] for s, k in counts.items()]})


def sachs_loop_pairs(reds, blues):
    """All 18 unordered pairs of complementary alternating 4-loops."""
    pairs = []
    for rp in combinations(reds, 2):
        rq = tuple(r for r in reds if r not in rp)
        for bp in combinations(blues, 2):
            bq = tuple(b for b in blues if b not in bp)
            l1 = BrokenLine((rp[0], bp[0], rp[1], bp[1]))
            l2 = BrokenLine((rq[0], bq[0], rq[1], bq[1]))
            key = frozenset([(rp, bp), (rq, bq)])
            pairs.append((key, l1, l2))
    seen, out = set(), []
    for key, l1, l2 in pairs:
        if key not in seen:
            seen.add(key)
            out.append((l1, l2))
    return out


def verify_sachs(cfg: Configuration, reds: Sequence[int] = (0, 1, 2, 3), blues: Sequence[int] = (4, 5, 6, 7)) -> ParityReport:
    """4 red + 4 blue points in 3-space: two linked alternating 4-loops."""
    name = "sachs"
    _arity(cfg, 8, 3, name)
    reds, blues = tuple(reds), tuple(blues)
    if sorted(reds + blues) != list(range(8)) or len(reds) != 4:
        raise InvalidInput("need 4 red and 4 blue indices partitioning the points")
    gp, wit = is_general_position(cfg)
    if not gp:
        return _degenerate(name, cfg, wit, Claim.WITNESS_EXISTS,
                           details={"precondition": "bichromatic segments must not share interior points"})
    witnesses = []
    for l1, l2 in sachs_loop_pairs(reds, blues):
        if quad_loops_linked(cfg, l1, l2).linked:
            witnesses.append((l1.vertices, l2.vertices))
    verdict = Verdict.CONFIRMED if witnesses else Verdict.VIOLATED
    return ParityReport(name, _summary(cfg), len(witnesses), Claim.WITNESS_EXISTS, verdict, witnesses)


# -- 4-space --------------------------------------------------------------

def verify_vkf(cfg: Configuration) -> ParityReport:
    """Seven points in 4-space: odd number of crossings of disjoint triangles."""
    name = "vkf"
    _arity(cfg, 7, 4, name)
    tris = list(combinations(range(7), 3))
    gp, wit = is_general_position(cfg)
    if gp:
        pairs, exc = _safe_count(lambda: crossing_pairs(cfg, tris))
        if exc is None:
            return _parity_report(name, cfg, len(pairs), Claim.ODD, pairs)
    return _degenerate(name, cfg, wit, Claim.WITNESS_EXISTS,
                       lambda: _first_closed_meeting(cfg, combinations(tris, 2)))


def triangle_surface_counts(cfg: Configuration) -> dict:
    out = {}
    for tri in combinations(range(len(cfg)), 3):
        rest = [i for i in range(len(cfg)) if i not in tri]
        out[tri] = sum(1 for face in combinations(rest, 3) if _hit(cfg, tri, face))
    return out


def verify_unlinking_r4(cfg: Configuration) -> ParityReport:
    name = "unlinking-r4"
    _arity(cfg, 7, 4, name)
    gp, wit = is_general_position(cfg)
    if not gp:
        return _degenerate(name, cfg, wit, Claim.EVEN)
    counts, exc = _safe_count(lambda: triangle_surface_counts(cfg))
    if exc is not None:
        return _degenerate(name, cfg, wit, Claim.EVEN, details={"error": str(exc)})
    total = sum(counts.values())
    nonzero = [t for t, k in counts.items() if k]
    return _parity_report(name, cfg, total, Claim.EVEN, nonzero)


def verify_join3(cfg: Configuration, triples: Sequence[Sequence[int]] = ((0, 1, 2), (3, 4, 5), (6, 7, 8))) -> ParityReport:
    """Three triples in 4-space: two vertex-disjoint intersecting triangles,
    each with one vertex from every triple."""
    name = "join3"
    _arity(cfg, 9, 4, name)
    triples = [tuple(t) for t in triples]
    if sorted(i for t in triples for i in t) != list(range(9)) or any(len(t) != 3 for t in triples):
        raise InvalidInput("the three triples must partition the nine points")
    tris = [simplex(a, b, c) for a in triples[0] for b in triples[1] for c in triples[2]]
    pairs = [(a, b) for a, b in combinations(tris, 2) if not set(a) & set(b)]
    for a, b in pairs:
        if crossing_status(cfg, a, b)[0] == HIT:
            return ParityReport(name, _summary(cfg), 1, Claim.WITNESS_EXISTS, Verdict.CONFIRMED, [(a, b)])
    found = _first_closed_meeting(cfg, pairs)
    verdict = Verdict.CONFIRMED if found else Verdict.VIOLATED
    return ParityReport(name, _summary(cfg), len(found), Claim.WITNESS_EXISTS, verdict, found)


# -- all dimensions -------------------------------------------------------

def verify_stat_il(cfg: Configuration, max_n: int = 8) -> ParityReport:
    """n+3 points in R^n.  Even n: crossings of disjoint n/2-simplices; odd n:
    linked pairs of disjoint (n+1)/2-simplices.  Both counts are odd."""
    name = "stat-il"
    n = cfg.dimension
    if n > max_n:
        raise InvalidInput(f"dimension {n} exceeds the cap {max_n}")
    if len(cfg) != n + 3:
        raise ArityError(f"stat-il needs {n + 3} points in R^{n}, got {len(cfg)}")
    gp, wit = is_general_position(cfg)
    if not gp:
        return _degenerate(name, cfg, wit, Claim.ODD)
    if n % 2 == 0:
        cells = list(combinations(range(n + 3), n // 2 + 1))
        pairs, exc = _safe_count(lambda: crossing_pairs(cfg, cells))
        if exc is not None:
            return _degenerate(name, cfg, wit, Claim.ODD, details={"error": str(exc)})
        return _parity_report(name, cfg, len(pairs), Claim.ODD, pairs, {"mode": "intersection"})
    k = (n + 1) // 2 + 1
    linked = []
    for s1 in combinations(range(n + 3), k):
        s2 = tuple(i for i in range(n + 3) if i not in s1)
        if s1 > s2:
            continue
        v, exc = _safe_count(lambda: simplices_linked(cfg, s1, s2))
        if exc is not None:
            return _degenerate(name, cfg, wit, Claim.ODD, details={"error": str(exc)})
        if v.linked:
            linked.append((s1, s2))
    return _parity_report(name, cfg, len(linked), Claim.ODD, linked, {"mode": "linking"})


GUARANTEED_SHAPES = {(5, 3, 3), (3, 5, 3), (4, 4, 3), (5, 5, 4)}


def verify_product(grid, exhaustive: bool | None = None) -> ParityReport:
    """Search a product grid for two vertex-disjoint intersecting triangles.

    For the shapes (5,3), (4,4) in R^3 and (5,5) in R^4 such a pair must
    exist; for other shapes the search either finds one or certifies absence.
    """
    name = "product"
    cfg = grid.config
    guaranteed = (grid.m, grid.n, cfg.dimension) in GUARANTEED_SHAPES
    if exhaustive is None:
        exhaustive = not guaranteed
    tris = list(grid.triangles)
    pairs = [(a, b) for a, b in combinations(tris, 2) if not set(a) & set(b)]
    found = []
    # transversal crossings first: cheap and decisive in general position
    for a, b in pairs:
        if dim(a) + dim(b) == cfg.dimension and crossing_status(cfg, a, b)[0] == HIT:
            found.append((a, b))
            if not exhaustive:
                break
    if exhaustive or not found:
        seen = set(found)
        for a, b in pairs:
            if (a, b) in seen:
                continue
            if _closed_meet(cfg, a, b):
                found.append((a, b))
                if not exhaustive:
                    break
    details = {"shape": [grid.m, grid.n], "guaranteed": guaranteed,
               "pairs_checked": len(pairs) if (exhaustive or not found) else None}
    if guaranteed:
        verdict = Verdict.CONFIRMED if found else Verdict.VIOLATED
        claim = Claim.WITNESS_EXISTS
    else:
        verdict = Verdict.CONFIRMED
        claim = Claim.SEARCH
        details["certified_absence"] = not found
    return ParityReport(name, f"({grid.m},{grid.n})-grid in R^{cfg.dimension}", len(found),
                        claim, verdict, found, details)


# -- deleted faces ----------------------------------------------------------

_DELFACE = {
    # variant: (removed pairs jk of the cone 0jk, candidate linked pairs)
    "a": ([(1, 2)], [((0, 1, 2), (3, 4, 5))]),
    "b": ([(1, 2), (1, 3)], [((0, 1, 2), (3, 4, 5)), ((0, 1, 3), (2, 4, 5))]),
    "c": ([(1, 2), (1, 3), (1, 4)], [((0, 1, 2), (3, 4, 5)), ((0, 1, 3), (2, 4, 5)),
                                     ((0, 1, 4), (2, 3, 5))]),
}


def deleted_face_family(variant: str):
    """The family (triangles and segments) whose embeddedness is assumed."""
    if variant == "r4a":
        tris = [t for t in combinations(range(7), 3) if t != (0, 1, 2)]
        return tris
    try:
        removed, _ = _DELFACE[variant]
    except KeyError:
        raise InvalidInput(f"unknown deleted-face variant {variant!r}") from None
    tris = [(0, j, k) for j, k in combinations(range(1, 6), 2) if (j, k) not in removed]
    return tris + [tuple(e) for e in removed]


def verify_deleted_face_linking(cfg: Configuration, variant: str = "a") -> ParityReport:
    """If the deleted-face family is embedded, one of the listed pairs is linked.

    Variants a, b, c: six points 0..5 in 3-space, the cone of triangles 0jk
    with the faces 012 (013, 014) replaced by their edges 12 (13, 14).
    Variant r4a: seven points in 4-space, all triangles except 012 embedded
    implies the triangle 012 is linked with the tetrahedron 3456.
    """
    name = "deleted-face"
    if variant == "r4a":
        _arity(cfg, 7, 4, name)
        candidates = [((0, 1, 2), (3, 4, 5, 6))]
    else:
        _arity(cfg, 6, 3, name)
        candidates = _DELFACE.get(variant, (None, None))[1]
    family = deleted_face_family(variant)
    gp, wit = is_general_position(cfg)
    ok, bad = is_embedded(cfg, family)
    if not gp or not ok:
        det = {"variant": variant, "precondition_failed": bad is not None}
        if bad is not None:
            det["improper_pair"] = [list(bad[0]), list(bad[1])]
        return _degenerate(name, cfg, wit if not gp else (), Claim.WITNESS_EXISTS, details=det)
    linked = []
    for s1, s2 in candidates:
        try:
            v = triangles_linked(cfg, s1, s2) if variant != "r4a" else _tri_tet_linked(cfg, s1, s2)
        except DegenerateInput as exc:
            return _degenerate(name, cfg, (), Claim.WITNESS_EXISTS, details={"error": str(exc)})
        if v:
            linked.append((s1, s2))
    verdict = Verdict.CONFIRMED if linked else Verdict.VIOLATED
    return ParityReport(name, _summary(cfg), len(linked), Claim.WITNESS_EXISTS, verdict, linked,
                        {"variant": variant})


def _tri_tet_linked(cfg, tri, tet):
    # boundary of the triangle (segments) against the tetrahedron: 1 + 3 = 4
    k = sum(1 for e in facets(tri) if _hit(cfg, e, tet))
    return k % 2 == 1


# -- registry -------------------------------------------------------------

REGISTRY: dict[str, Callable] = {
    "plane-intersection": verify_plane_intersection,
    "k33": verify_k33_plane,
    "red-blue-plane": verify_rlt_pre,
    "unlinking-plane": verify_unlinking_plane,
    "cgs": verify_cgs,
    "intersection-r3": verify_intersection_r3,
    "unlinking-r3": verify_unlinking_r3,
    "sachs": verify_sachs,
    "vkf": verify_vkf,
    "unlinking-r4": verify_unlinking_r4,
    "join3": verify_join3,
    "stat-il": verify_stat_il,
    "product": verify_product,
    "deleted-face": verify_deleted_face_linking,
}


def verify(theorem: str, subject, **kwargs) -> ParityReport:
    try:
        fn = REGISTRY[theorem]
    except KeyError:
        raise InvalidInput(f"unknown theorem id {theorem!r}; known: {', '.join(sorted(REGISTRY))}") from None
    return fn(subject, **kwargs)
